#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "mvi/vec.hpp"

namespace mvi {

/// How a single value u in A(x) is picked from a set-valued image.
/// The deterministic strategies are pure functions of the query point;
/// SeededRandom is a pure function of (seed, iteration).
enum class SelectionStrategy { Midpoint, LowerEnd, UpperEnd, SeededRandom };

struct SelectionContext {
  SelectionStrategy strategy = SelectionStrategy::Midpoint;
  std::uint64_t seed = 0;        // used by SeededRandom only
  std::int64_t iteration = 0;
};

/// Pick a value from [lo, hi] according to the selection strategy.
double pick_from_interval(const SelectionContext& ctx, double lo, double hi);

/// Convex set C = { x : g(x) <= 0 } with a subgradient oracle for g and,
/// when available, an exact Euclidean projector onto C.
struct FeasibleSet {
  std::function<double(const Point&)> constraint;      // g, convex
  std::function<Point(const Point&)> subgradient;      // some element of dg(x)
  std::function<Point(const Point&)> exact_projector;  // empty when unavailable
  double feas_tol = 1e-12;

  bool has_exact_projector() const { return static_cast<bool>(exact_projector); }
};

/// Membership test: g(x) <= feas_tol.
bool membership(const FeasibleSet& set, const Point& x);

/// Oracle for a set-valued map A. `select` returns some u in A(x) according
/// to the selection strategy; `nearest` returns argmin over nu in A(y) of
/// ||nu - u|| (the metric projection of u onto the compact convex image A(y)).
struct SetValuedMap {
  std::function<Point(const Point&, const SelectionContext&)> select;
  std::function<Point(const Point&, const Point&)> nearest;
  std::string description;
};

/// Map whose images are segments: A(x) = { base(x) + t*dir : t in [t_lo, t_hi] }.
/// `nearest` is a closed-form clamp of the implied parameter t.
SetValuedMap interval_map(std::function<Point(const Point&)> base, Point dir,
                          double t_lo, double t_hi, std::string description);

enum class ValidationMode { Strict, Warn, Off };

struct SolverParams {
  double mu = 0.5;       // line-search acceptance factor, in (0,1)
  double gamma = 0.5;    // backtracking ratio, in (0,1)
  double alpha = 0.0;    // constant inertia coefficient, >= 0
  double epsilon = 1e-6; // stopping tolerance on the residual norm
  int max_iters = 10'000;
  int max_linesearch = 100;
  ValidationMode validation = ValidationMode::Warn;
  bool instrument = true;  // record per-iteration invariant checks in the trace
};

struct VIProblem {
  FeasibleSet set;
  SetValuedMap map;
  int dim = 0;
  std::optional<Point> known_solution;  // diagnostics only
  // Bounding box of C used by feasible-point samplers (diagnostics only).
  Point sample_lo, sample_hi;
};

struct InfeasibleProblemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamsOutOfTheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mvi
