#include "mvi/problem.hpp"

#include <utility>

#include "mvi/rng.hpp"

namespace mvi {

double pick_from_interval(const SelectionContext& ctx, double lo, double hi) {
  switch (ctx.strategy) {
    case SelectionStrategy::LowerEnd:
      return lo;
    case SelectionStrategy::UpperEnd:
      return hi;
    case SelectionStrategy::Midpoint:
      return 0.5 * (lo + hi);
    case SelectionStrategy::SeededRandom:
      return lo + uniform_at(ctx.seed, static_cast<std::uint64_t>(ctx.iteration)) * (hi - lo);
  }
  throw std::logic_error("unknown selection strategy");
}

bool membership(const FeasibleSet& set, const Point& x) {
  ensure_finite(x, "x");
  return set.constraint(x) <= set.feas_tol;
}

SetValuedMap interval_map(std::function<Point(const Point&)> base, Point dir,
                          double t_lo, double t_hi, std::string description) {
  if (!(t_lo <= t_hi)) throw std::invalid_argument("interval_map: t_lo > t_hi");
  const double dir_sq = norm_sq(dir);
  if (dir_sq <= 0.0) throw std::invalid_argument("interval_map: zero direction");

  SetValuedMap map;
  map.description = std::move(description);
  map.select = [base, dir, t_lo, t_hi](const Point& x, const SelectionContext& ctx) {
    const double t = pick_from_interval(ctx, t_lo, t_hi);
    return axpy(t, dir, base(x));
  };
  map.nearest = [base, dir, dir_sq, t_lo, t_hi](const Point& y, const Point& u) {
    const Point b = base(y);
    // Minimize ||b + t*dir - u||^2 over t in [t_lo, t_hi]: 1-D clamp.
    double t = dot(sub(u, b), dir) / dir_sq;
    t = std::min(std::max(t, t_lo), t_hi);
    return axpy(t, dir, b);
  };
  return map;
}

}  // namespace mvi
