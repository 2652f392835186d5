#include "mvi/linesearch.hpp"

#include "mvi/residual.hpp"

namespace mvi {

LineSearchResult armijo_search(const FeasibleSet& set, const SetValuedMap& map,
                               const Point& w, const Point& u, double mu, double gamma,
                               int max_m, const SelectionContext& ctx) {
  (void)ctx;  // reserved for selection-aware oracles; nu uses the nearest selection
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("armijo_search: mu not in (0,1)");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("armijo_search: gamma not in (0,1)");
  }
  ensure_finite(w, "w");
  ensure_finite(u, "u");

  LineSearchResult probe;
  double lambda = 1.0;
  for (int m = 0; m <= max_m; ++m) {
    const Residual r = residual(set, w, u, lambda);
    probe.lambda = lambda;
    probe.m = m;
    probe.y = sub(w, r.vector);  // P_C(w - lambda*u)
    probe.residual_norm = r.norm;
    if (r.norm == 0.0) {
      probe.nu = u;  // w = P_C(w - lambda*u): solution detected, caller stops
      return probe;
    }
    probe.nu = map.nearest(probe.y, u);
    if (lambda * dist(u, probe.nu) <= mu * r.norm) {
      return probe;
    }
    lambda *= gamma;
  }
  throw LineSearchStalledError(std::move(probe));
}

}  // namespace mvi
