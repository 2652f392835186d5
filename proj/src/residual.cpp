#include "mvi/residual.hpp"

#include <algorithm>

namespace mvi {

Residual residual(const FeasibleSet& set, const Point& x, const Point& w, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("residual: mu must be positive");
  ensure_finite(x, "x");
  ensure_finite(w, "w");
  if (!set.has_exact_projector()) {
    throw std::invalid_argument("residual: set has no exact projector");
  }
  Point r = sub(x, set.exact_projector(axpy(-mu, w, x)));
  const double n = norm(r);
  return {std::move(r), n, mu};
}

bool scaling_bounds_check(const FeasibleSet& set, const Point& x, const Point& w,
                          double mu, double tol) {
  const double r_mu = residual(set, x, w, mu).norm;
  const double r_1 = residual(set, x, w, 1.0).norm;
  const double lower = std::min(1.0, mu) * r_1;
  const double upper = std::max(1.0, mu) * r_1;
  return lower <= r_mu + tol && r_mu <= upper + tol;
}

}  // namespace mvi
