// Independent reference computations used by the tests. These deliberately
// avoid the library's solver paths: the projection oracle minimizes the
// distance directly with pairwise coordinate descent, and the line-search
// oracle replays the backtracking definition with raw loops.
#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "mvi/problem.hpp"

namespace oracles {

/// Euclidean projection onto { y : sum(y) = rhs, lo <= y <= hi } by exact
/// pairwise coordinate descent from a feasible start. For a strictly convex
/// objective over this polytope the pair-exchange directions span all
/// feasible directions, so the sweep converges to the unique minimizer.
inline mvi::Point qp_project(const mvi::Point& lo, const mvi::Point& hi, double rhs,
                             const mvi::Point& x) {
  const std::size_t n = x.size();
  // Feasible start: clamp into the box, then water-fill the sum mismatch.
  mvi::Point y(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = std::min(std::max(x[i], lo[i]), hi[i]);
    sum += y[i];
  }
  double gap = rhs - sum;
  for (std::size_t i = 0; i < n && std::abs(gap) > 0.0; ++i) {
    const double room = gap > 0.0 ? hi[i] - y[i] : lo[i] - y[i];
    const double take = gap > 0.0 ? std::min(gap, room) : std::max(gap, room);
    y[i] += take;
    gap -= take;
  }

  for (int sweep = 0; sweep < 100000; ++sweep) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // minimize (y_i + d - x_i)^2 + (y_j - d - x_j)^2 over admissible d
        double d = 0.5 * ((x[i] - y[i]) - (x[j] - y[j]));
        d = std::min(d, std::min(hi[i] - y[i], y[j] - lo[j]));
        d = std::max(d, std::max(lo[i] - y[i], y[j] - hi[j]));
        y[i] += d;
        y[j] -= d;
        moved += std::abs(d);
      }
    }
    if (moved < 1e-15) break;
  }
  return y;
}

struct Probe {
  int m = 0;
  double lambda = 1.0;
  mvi::Point y;
  mvi::Point nu;
  double residual_norm = 0.0;
  bool solution_signal = false;
  bool accepted = false;
};

/// Replay of the backtracking definition: for m = 0, 1, ... probe
/// y = P_C(w - gamma^m u), nu = nearest(y, u) and accept the first m with
/// gamma^m * ||u - nu|| <= mu * ||w - y||.
inline Probe linesearch_replay(const mvi::FeasibleSet& set, const mvi::SetValuedMap& map,
                               const mvi::Point& w, const mvi::Point& u, double mu,
                               double gamma, int max_m) {
  Probe p;
  double lambda = 1.0;
  for (int m = 0; m <= max_m; ++m) {
    mvi::Point shifted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] - lambda * u[i];
    const mvi::Point y = set.exact_projector(shifted);
    double rn = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) rn += (w[i] - y[i]) * (w[i] - y[i]);
    rn = std::sqrt(rn);
    p.m = m;
    p.lambda = lambda;
    p.y = y;
    p.residual_norm = rn;
    if (rn == 0.0) {
      p.nu = u;
      p.solution_signal = true;
      p.accepted = true;
      return p;
    }
    p.nu = map.nearest(y, u);
    double gap = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) gap += (u[i] - p.nu[i]) * (u[i] - p.nu[i]);
    if (lambda * std::sqrt(gap) <= mu * rn) {
      p.accepted = true;
      return p;
    }
    lambda *= gamma;
  }
  p.accepted = false;
  return p;
}

/// Does the probe at a fixed m violate the acceptance inequality?
inline bool probe_fails(const mvi::FeasibleSet& set, const mvi::SetValuedMap& map,
                        const mvi::Point& w, const mvi::Point& u, double mu, double gamma,
                        int m) {
  double lambda = 1.0;
  for (int k = 0; k < m; ++k) lambda *= gamma;
  mvi::Point shifted(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] - lambda * u[i];
  const mvi::Point y = set.exact_projector(shifted);
  double rn = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) rn += (w[i] - y[i]) * (w[i] - y[i]);
  rn = std::sqrt(rn);
  if (rn == 0.0) return false;
  const mvi::Point nu = map.nearest(y, u);
  double gap = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) gap += (u[i] - nu[i]) * (u[i] - nu[i]);
  return lambda * std::sqrt(gap) > mu * rn;
}

inline mvi::Point random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  mvi::Point p(n);
  for (double& v : p) v = dist(rng);
  return p;
}

}  // namespace oracles
