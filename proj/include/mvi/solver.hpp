#pragma once

#include <vector>

#include "mvi/feasibility.hpp"
#include "mvi/linesearch.hpp"

namespace mvi {

/// Outcome of a per-iteration invariant check. `slack` is the margin by
/// which the inequality holds; pass means slack >= -tolerance.
struct CheckResult {
  std::string name;
  bool pass = true;
  double slack = 0.0;
};

struct IterationRecord {
  int n = 0;
  Point x;               // x_n, the repaired iterate
  Point w;               // inertial point
  Point u;               // selected operator value at w
  double lambda = 1.0;
  int m = 0;
  double residual_norm = 0.0;
  int repair_steps = 0;  // subgradient steps spent producing x_n
  double wallclock = 0.0;
  std::vector<CheckResult> checks;
};

enum class SolveStatus { Converged, MaxIters, LineSearchStalled, InfeasibleProblem };

const char* to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIters;
  Point solution;
  double final_residual = 0.0;
  int iterations = 0;
  std::vector<IterationRecord> trace;
  std::vector<std::string> warnings;
};

/// Largest admissible constant inertia coefficient for a given mu:
/// 1 - 4/(sqrt(8*tau + 1) + 3) with tau = 2/(mu + 1) - 1. Requires mu in (0,1).
double alpha_bound(double mu);

/// x + alpha*(x - x_prev)
Point inertial_step(const Point& x, const Point& x_prev, double alpha);

/// y - lambda*(nu - u). The output may leave C; it is repaired next iteration.
Point tseng_step(const Point& y, const Point& nu, const Point& u, double lambda);

/// Range checks on the parameters (throws std::invalid_argument) plus the
/// inertia-bound policy: Strict throws ParamsOutOfTheoryError when
/// alpha >= alpha_bound(mu), Warn returns a diagnostic, Off skips the bound.
std::vector<std::string> validate_params(const SolverParams& params);

/// Run the one-projection inertial extragradient loop:
/// repair the iterate, extrapolate, select u in A(w), backtrack for lambda,
/// stop when ||r_lambda(w, u)|| <= epsilon (returning w), otherwise apply the
/// Tseng correction and continue. Repair and line-search failures are
/// reported through SolveReport::status rather than thrown.
SolveReport solve(const VIProblem& problem, const SolverParams& params,
                  const Point& x0, const Point& x1,
                  const SelectionContext& selection = {});

}  // namespace mvi
