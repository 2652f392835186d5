#pragma once

#include "mvi/problem.hpp"

namespace mvi {

struct LineSearchResult {
  double lambda = 1.0;        // gamma^m, by repeated multiplication
  int m = 0;
  Point y;                    // P_C(w - lambda*u)
  Point nu;                   // element of A(y)
  double residual_norm = 0.0; // ||r_lambda(w, u)||
};

struct LineSearchStalledError : std::runtime_error {
  LineSearchResult last_probe;
  explicit LineSearchStalledError(LineSearchResult probe)
      : std::runtime_error("line search exceeded the backtracking budget"),
        last_probe(std::move(probe)) {}
};

/// Armijo-type backtracking: find the smallest m >= 0 such that, with
/// lambda = gamma^m, y = P_C(w - lambda*u) and nu = nearest(y, u),
///   gamma^m * ||u - nu|| <= mu * ||r_lambda(w, u)||.
///
/// A probe with a vanishing residual returns immediately with
/// residual_norm 0 and nu = u (w already solves the problem).
/// Throws LineSearchStalledError past max_m probes.
LineSearchResult armijo_search(const FeasibleSet& set, const SetValuedMap& map,
                               const Point& w, const Point& u, double mu, double gamma,
                               int max_m, const SelectionContext& ctx = {});

}  // namespace mvi
