#include "mvi/feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace mvi {

namespace {
constexpr double kZeroSubgradient = 1e-14;
constexpr double kSumTol = 1e-12;
}  // namespace

const char* to_string(RepairMethod m) {
  switch (m) {
    case RepairMethod::AlreadyFeasible: return "AlreadyFeasible";
    case RepairMethod::ProcedureA: return "ProcedureA";
    case RepairMethod::ExactProjector: return "ExactProjector";
  }
  return "?";
}

FeasibilityReport procedure_a(const FeasibleSet& set, const Point& x, int max_steps) {
  ensure_finite(x, "x");
  if (max_steps < 1) throw std::invalid_argument("procedure_a: max_steps must be >= 1");

  double g = set.constraint(x);
  if (g <= set.feas_tol) {
    return {x, 0, RepairMethod::AlreadyFeasible};
  }

  Point y = x;
  for (int k = 1; k <= max_steps; ++k) {
    const Point w = set.subgradient(y);
    const double w_sq = norm_sq(w);
    if (std::sqrt(w_sq) <= kZeroSubgradient) {
      throw InfeasibleProblemError(
          "procedure_a: vanishing subgradient at an infeasible point (C is empty)");
    }
    y = axpy(-2.0 * g / w_sq, w, y);
    g = set.constraint(y);
    if (g <= set.feas_tol) {
      return {std::move(y), k, RepairMethod::ProcedureA};
    }
  }
  throw BudgetExhaustedError("procedure_a: step budget exhausted");
}

FeasibilityReport repair(const FeasibleSet& set, const Point& x, int max_steps) {
  ensure_finite(x, "x");
  if (set.has_exact_projector()) {
    return {set.exact_projector(x), 0, RepairMethod::ExactProjector};
  }
  return procedure_a(set, x, max_steps);
}

Point project_box(const Point& lo, const Point& hi, const Point& x) {
  check_same_dim(lo, hi);
  check_same_dim(lo, x);
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("project_box: lo > hi");
    y[i] = std::min(std::max(x[i], lo[i]), hi[i]);
  }
  return y;
}

Point project_hyperplane_box(const Point& lo, const Point& hi, double rhs, const Point& x) {
  check_same_dim(lo, hi);
  check_same_dim(lo, x);
  double sum_lo = 0.0, sum_hi = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("project_hyperplane_box: lo > hi");
    sum_lo += lo[i];
    sum_hi += hi[i];
  }
  if (rhs < sum_lo - kSumTol || rhs > sum_hi + kSumTol) {
    throw std::invalid_argument("project_hyperplane_box: empty feasible set");
  }

  const auto clamped = [&](double s) {
    Point y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      y[i] = std::min(std::max(x[i] - s, lo[i]), hi[i]);
    }
    return y;
  };
  const auto sum_of = [](const Point& y) {
    double s = 0.0;
    for (double v : y) s += v;
    return s;
  };

  // s = 0 is exact when x already satisfies the sum constraint inside the box.
  Point y = clamped(0.0);
  if (std::abs(sum_of(y) - rhs) <= kSumTol) return y;

  double s_lo = x[0] - hi[0], s_hi = x[0] - lo[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    s_lo = std::min(s_lo, x[i] - hi[i]);
    s_hi = std::max(s_hi, x[i] - lo[i]);
  }
  // sum(y(s_lo)) = sum(hi) >= rhs and sum(y(s_hi)) = sum(lo) <= rhs.
  for (int iter = 0; iter < 200; ++iter) {
    const double s = 0.5 * (s_lo + s_hi);
    y = clamped(s);
    const double gap = sum_of(y) - rhs;
    if (std::abs(gap) <= kSumTol) return y;
    if (gap > 0.0) {
      s_lo = s;
    } else {
      s_hi = s;
    }
  }
  return y;
}

FeasibleSet box_set(const Point& lo, const Point& hi, bool with_projector) {
  check_same_dim(lo, hi);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("box_set: lo > hi");
  }
  const std::size_t n = lo.size();

  FeasibleSet set;
  // Pieces in index order: x_i - hi_i, lo_i - x_i for i = 0..n-1.
  set.constraint = [lo, hi, n](const Point& x) {
    check_same_dim(lo, x);
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      g = std::max(g, x[i] - hi[i]);
      g = std::max(g, lo[i] - x[i]);
    }
    return g;
  };
  set.subgradient = [lo, hi, n](const Point& x) {
    check_same_dim(lo, x);
    double g = -std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    bool upper = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] - hi[i] > g) {
        g = x[i] - hi[i];
        arg = i;
        upper = true;
      }
      if (lo[i] - x[i] > g) {
        g = lo[i] - x[i];
        arg = i;
        upper = false;
      }
    }
    Point w(n, 0.0);
    w[arg] = upper ? 1.0 : -1.0;
    return w;
  };
  if (with_projector) {
    set.exact_projector = [lo, hi](const Point& x) { return project_box(lo, hi, x); };
  }
  return set;
}

FeasibleSet hyperplane_box_set(const Point& lo, const Point& hi, double rhs,
                               bool with_projector) {
  check_same_dim(lo, hi);
  const std::size_t n = lo.size();

  FeasibleSet set;
  // Piece order: (sum - rhs)^2 first, then the box pieces as in box_set.
  set.constraint = [lo, hi, rhs, n](const Point& x) {
    check_same_dim(lo, x);
    double sum = 0.0;
    for (double v : x) sum += v;
    const double d = sum - rhs;
    double g = d * d;
    for (std::size_t i = 0; i < n; ++i) {
      g = std::max(g, x[i] - hi[i]);
      g = std::max(g, lo[i] - x[i]);
    }
    return g;
  };
  set.subgradient = [lo, hi, rhs, n](const Point& x) {
    check_same_dim(lo, x);
    double sum = 0.0;
    for (double v : x) sum += v;
    const double d = sum - rhs;
    double g = d * d;
    std::size_t arg = 0;
    bool upper = true;
    bool sum_piece = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] - hi[i] > g) {
        g = x[i] - hi[i];
        arg = i;
        upper = true;
        sum_piece = false;
      }
      if (lo[i] - x[i] > g) {
        g = lo[i] - x[i];
        arg = i;
        upper = false;
        sum_piece = false;
      }
    }
    if (sum_piece) {
      return Point(n, 2.0 * d);  // gradient of (sum - rhs)^2
    }
    Point w(n, 0.0);
    w[arg] = upper ? 1.0 : -1.0;
    return w;
  };
  if (with_projector) {
    set.exact_projector = [lo, hi, rhs](const Point& x) {
      return project_hyperplane_box(lo, hi, rhs, x);
    };
  }
  return set;
}

}  // namespace mvi
