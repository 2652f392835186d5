#pragma once

#include "mvi/problem.hpp"

namespace mvi {

enum class RepairMethod { AlreadyFeasible, ProcedureA, ExactProjector };

const char* to_string(RepairMethod m);

struct FeasibilityReport {
  Point output;
  int steps = 0;  // subgradient steps taken; 0 unless method == ProcedureA with work done
  RepairMethod method = RepairMethod::AlreadyFeasible;
};

/// Subgradient feasibility loop. Starting from y0 = x, iterates
///   y_{k+1} = y_k - 2 g(y_k) w_k / ||w_k||^2,  w_k in dg(y_k),
/// until g(y) <= feas_tol. Every step is nonexpansive towards C, so the
/// output R(x) satisfies ||R(x) - y|| <= ||x - y|| for all y in C.
///
/// Throws InfeasibleProblemError when a vanishing subgradient is met at an
/// infeasible point (min g > 0, i.e. C is empty), BudgetExhaustedError when
/// max_steps is spent.
FeasibilityReport procedure_a(const FeasibleSet& set, const Point& x, int max_steps = 10'000);

/// Produce a feasible point from an arbitrary one: the exact projector when
/// the set has one, otherwise procedure_a.
FeasibilityReport repair(const FeasibleSet& set, const Point& x, int max_steps = 10'000);

/// Componentwise clamp of x into [lo, hi].
Point project_box(const Point& lo, const Point& hi, const Point& x);

/// Euclidean projection onto { y : sum(y) = rhs, lo <= y <= hi }, computed by
/// bisection on the multiplier s of y(s) = clamp(x - s*1, lo, hi); sum(y(s))
/// is non-increasing in s. Terminates when |sum(y) - rhs| <= 1e-12.
Point project_hyperplane_box(const Point& lo, const Point& hi, double rhs, const Point& x);

/// Box [lo, hi] as a FeasibleSet: g is the max of the affine bound violations,
/// subgradient is the gradient of the active piece (ties to the lowest index).
FeasibleSet box_set(const Point& lo, const Point& hi, bool with_projector = true);

/// { x : sum(x) = rhs, lo <= x <= hi } as a FeasibleSet. g is the max of the
/// affine bound violations and the squared sum violation (sum(x) - rhs)^2;
/// squaring makes the subgradient step of procedure_a land exactly on the
/// hyperplane instead of reflecting across it.
FeasibleSet hyperplane_box_set(const Point& lo, const Point& hi, double rhs,
                               bool with_projector = true);

}  // namespace mvi
