#include "mvi/verify.hpp"

#include <algorithm>
#include <array>

#include "mvi/feasibility.hpp"
#include "mvi/rng.hpp"

namespace mvi {

namespace {

constexpr double kPassTol = 1e-6;

std::array<Point, 3> tested_values(const VIProblem& problem, const Point& x) {
  SelectionContext ctx;
  ctx.strategy = SelectionStrategy::LowerEnd;
  Point lo = problem.map.select(x, ctx);
  ctx.strategy = SelectionStrategy::Midpoint;
  Point mid = problem.map.select(x, ctx);
  ctx.strategy = SelectionStrategy::UpperEnd;
  Point hi = problem.map.select(x, ctx);
  return {std::move(lo), std::move(mid), std::move(hi)};
}

double sample_violation(const VIProblem& problem, const Point& x,
                        const std::array<Point, 3>& tested, std::uint64_t seed,
                        std::uint64_t index) {
  const Point y = sample_feasible(problem, seed, index);
  double best = std::numeric_limits<double>::infinity();
  for (const Point& w : tested) {
    best = std::min(best, dot(w, sub(y, x)));
  }
  return best < 0.0 ? -best : 0.0;
}

void check_verify_args(const VIProblem& problem, const Point& x, int samples) {
  ensure_finite(x, "x");
  if (samples < 1) throw std::invalid_argument("verify_solution: samples must be >= 1");
  if (!membership(problem.set, x)) {
    throw std::invalid_argument("verify_solution: x is not feasible");
  }
}

}  // namespace

Point sample_feasible(const VIProblem& problem, std::uint64_t seed, std::uint64_t index) {
  if (static_cast<int>(problem.sample_lo.size()) != problem.dim ||
      static_cast<int>(problem.sample_hi.size()) != problem.dim) {
    throw std::invalid_argument("sample_feasible: problem has no sampling box");
  }
  std::uint64_t state = mix_seed(seed, index);
  Point y(problem.dim);
  for (int i = 0; i < problem.dim; ++i) {
    y[i] = problem.sample_lo[i] +
           u01(splitmix64(state)) * (problem.sample_hi[i] - problem.sample_lo[i]);
  }
  return repair(problem.set, y).output;
}

VerifyResult verify_solution(const VIProblem& problem, const Point& x, int samples,
                             std::uint64_t seed) {
  check_verify_args(problem, x, samples);
  const std::array<Point, 3> tested = tested_values(problem, x);

  double worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
  for (int k = 0; k < samples; ++k) {
    worst = std::max(worst,
                     sample_violation(problem, x, tested, seed, static_cast<std::uint64_t>(k)));
  }
  return {worst <= kPassTol, worst};
}

VerifyResult verify_solution_serial(const VIProblem& problem, const Point& x, int samples,
                                    std::uint64_t seed) {
  check_verify_args(problem, x, samples);
  const std::array<Point, 3> tested = tested_values(problem, x);

  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    worst = std::max(worst,
                     sample_violation(problem, x, tested, seed, static_cast<std::uint64_t>(k)));
  }
  return {worst <= kPassTol, worst};
}

}  // namespace mvi
