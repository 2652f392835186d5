#include "mvi/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mvi {

namespace {

constexpr double kLemma41Tol = 1e-9;
constexpr double kTsengBoundTol = 1e-12;
constexpr double kPhiTol = 1e-9;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CheckResult make_check(const char* name, double slack, double tol) {
  return {name, slack >= -tol, slack};
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIters: return "MaxIters";
    case SolveStatus::LineSearchStalled: return "LineSearchStalled";
    case SolveStatus::InfeasibleProblem: return "InfeasibleProblem";
  }
  return "?";
}

double alpha_bound(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("alpha_bound: mu not in (0,1)");
  const double tau = 2.0 / (mu + 1.0) - 1.0;
  return 1.0 - 4.0 / (std::sqrt(8.0 * tau + 1.0) + 3.0);
}

Point inertial_step(const Point& x, const Point& x_prev, double alpha) {
  check_same_dim(x, x_prev);
  Point w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = x[i] + alpha * (x[i] - x_prev[i]);
  return w;
}

Point tseng_step(const Point& y, const Point& nu, const Point& u, double lambda) {
  check_same_dim(y, nu);
  check_same_dim(y, u);
  Point x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] - lambda * (nu[i] - u[i]);
  return x;
}

std::vector<std::string> validate_params(const SolverParams& p) {
  if (!(p.mu > 0.0 && p.mu < 1.0)) throw std::invalid_argument("mu must be in (0,1)");
  if (!(p.gamma > 0.0 && p.gamma < 1.0)) throw std::invalid_argument("gamma must be in (0,1)");
  if (!(p.alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (p.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (p.max_linesearch < 1) throw std::invalid_argument("max_linesearch must be >= 1");

  std::vector<std::string> warnings;
  if (p.validation == ValidationMode::Off) return warnings;
  const double bound = alpha_bound(p.mu);
  if (p.alpha >= bound) {
    const std::string msg = "alpha " + fmt(p.alpha) + " exceeds inertia bound " +
                            fmt(bound) + " for mu " + fmt(p.mu);
    if (p.validation == ValidationMode::Strict) throw ParamsOutOfTheoryError(msg);
    warnings.push_back(msg);
  }
  return warnings;
}

SolveReport solve(const VIProblem& problem, const SolverParams& params,
                  const Point& x0, const Point& x1, const SelectionContext& selection) {
  SolveReport report;
  report.warnings = validate_params(params);
  ensure_finite(x0, "x0");
  ensure_finite(x1, "x1");
  if (static_cast<int>(x0.size()) != problem.dim || static_cast<int>(x1.size()) != problem.dim) {
    throw std::invalid_argument("solve: initial points do not match the problem dimension");
  }

  const double mu = params.mu;
  const double alpha = params.alpha;
  const double tau = 2.0 / (mu + 1.0) - 1.0;
  const double delta = alpha * (1.0 + alpha) - tau * (alpha * alpha - alpha);
  const bool track_solution = params.instrument && problem.known_solution.has_value();
  const bool track_phi = track_solution && alpha < alpha_bound(mu);
  const Point* x_star = track_solution ? &*problem.known_solution : nullptr;

  report.final_residual = std::numeric_limits<double>::infinity();

  Point x_prev, x_curr;
  int curr_repair_steps = 0;
  try {
    x_prev = repair(problem.set, x0).output;  // x_0
    const FeasibilityReport rep = repair(problem.set, x1);
    x_curr = rep.output;  // x_1
    curr_repair_steps = rep.steps;
  } catch (const InfeasibleProblemError& e) {
    report.status = SolveStatus::InfeasibleProblem;
    report.solution = x1;
    report.warnings.push_back(e.what());
    return report;
  } catch (const BudgetExhaustedError& e) {
    report.status = SolveStatus::InfeasibleProblem;
    report.solution = x1;
    report.warnings.push_back(e.what());
    return report;
  }

  double phi_prev = 0.0;
  if (track_phi) {
    phi_prev = dist(x_curr, *x_star) * dist(x_curr, *x_star) -
               alpha * dist(x_prev, *x_star) * dist(x_prev, *x_star) +
               delta * dist(x_curr, x_prev) * dist(x_curr, x_prev);
  }

  SelectionContext ctx = selection;
  for (int n = 1; n <= params.max_iters; ++n) {
    const auto iter_start = std::chrono::steady_clock::now();
    IterationRecord rec;
    rec.n = n;
    rec.x = x_curr;
    rec.repair_steps = curr_repair_steps;

    rec.w = inertial_step(x_curr, x_prev, alpha);
    ctx.iteration = n;
    rec.u = problem.map.select(rec.w, ctx);

    LineSearchResult ls;
    try {
      ls = armijo_search(problem.set, problem.map, rec.w, rec.u, mu, params.gamma,
                         params.max_linesearch, ctx);
    } catch (const LineSearchStalledError& e) {
      rec.lambda = e.last_probe.lambda;
      rec.m = e.last_probe.m;
      rec.residual_norm = e.last_probe.residual_norm;
      rec.wallclock = seconds_since(iter_start);
      report.trace.push_back(std::move(rec));
      report.status = SolveStatus::LineSearchStalled;
      report.solution = x_curr;
      report.final_residual = e.last_probe.residual_norm;
      report.iterations = n;
      report.warnings.push_back(e.what());
      return report;
    }
    rec.lambda = ls.lambda;
    rec.m = ls.m;
    rec.residual_norm = ls.residual_norm;

    if (params.instrument) {
      rec.checks.push_back(
          make_check("feasible", problem.set.feas_tol - problem.set.constraint(x_curr), 0.0));
    }

    if (ls.residual_norm <= params.epsilon) {
      rec.wallclock = seconds_since(iter_start);
      report.trace.push_back(std::move(rec));
      report.status = SolveStatus::Converged;
      report.solution = report.trace.back().w;  // w_n solves the VI

      report.final_residual = ls.residual_norm;
      report.iterations = n;
      return report;
    }

    const Point x_tilde = tseng_step(ls.y, ls.nu, rec.u, ls.lambda);

    FeasibilityReport rep;
    try {
      rep = repair(problem.set, x_tilde);
    } catch (const InfeasibleProblemError& e) {
      rec.wallclock = seconds_since(iter_start);
      report.trace.push_back(std::move(rec));
      report.status = SolveStatus::InfeasibleProblem;
      report.solution = x_curr;
      report.final_residual = ls.residual_norm;
      report.iterations = n;
      report.warnings.push_back(e.what());
      return report;
    } catch (const BudgetExhaustedError& e) {
      rec.wallclock = seconds_since(iter_start);
      report.trace.push_back(std::move(rec));
      report.status = SolveStatus::InfeasibleProblem;
      report.solution = x_curr;
      report.final_residual = ls.residual_norm;
      report.iterations = n;
      report.warnings.push_back(e.what());
      return report;
    }
    const Point& x_next = rep.output;

    if (params.instrument) {
      // ||r|| >= ||x_tilde - w|| / (1 + mu)
      rec.checks.push_back(make_check(
          "tseng_bound", ls.residual_norm - dist(x_tilde, rec.w) / (1.0 + mu), kTsengBoundTol));
      if (track_solution) {
        const double lhs = dist(x_next, *x_star) * dist(x_next, *x_star);
        const double rhs = dist(rec.w, *x_star) * dist(rec.w, *x_star) -
                           (1.0 - mu * mu) * ls.residual_norm * ls.residual_norm;
        rec.checks.push_back(make_check("lemma41", rhs - lhs, kLemma41Tol));
        if (track_phi) {
          const double phi_next = dist(x_next, *x_star) * dist(x_next, *x_star) -
                                  alpha * dist(x_curr, *x_star) * dist(x_curr, *x_star) +
                                  delta * dist(x_next, x_curr) * dist(x_next, x_curr);
          rec.checks.push_back(make_check("phi_monotone", phi_prev - phi_next, kPhiTol));
          phi_prev = phi_next;
        }
      }
    }

    rec.wallclock = seconds_since(iter_start);
    report.final_residual = ls.residual_norm;
    report.trace.push_back(std::move(rec));

    x_prev = std::move(x_curr);
    x_curr = x_next;
    curr_repair_steps = rep.steps;
  }

  report.status = SolveStatus::MaxIters;
  report.solution = x_curr;
  report.iterations = params.max_iters;
  return report;
}

}  // namespace mvi
