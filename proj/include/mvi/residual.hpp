#pragma once

#include "mvi/problem.hpp"

namespace mvi {

/// Natural residual r_mu(x, w) = x - P_C(x - mu*w). Vanishes exactly at the
/// points where (x, w) solves the variational inequality.
struct Residual {
  Point vector;
  double norm = 0.0;
  double mu = 1.0;
};

/// Evaluate the natural residual. Requires mu > 0 and a set with an exact
/// projector (the residual is defined through the true projection P_C).
Residual residual(const FeasibleSet& set, const Point& x, const Point& w, double mu);

/// Check min{1,mu}*||r_1|| <= ||r_mu|| <= max{1,mu}*||r_1|| within `tol`.
bool scaling_bounds_check(const FeasibleSet& set, const Point& x, const Point& w,
                          double mu, double tol = 1e-10);

}  // namespace mvi
