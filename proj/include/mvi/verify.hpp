#pragma once

#include <cstdint>

#include "mvi/problem.hpp"

namespace mvi {

struct VerifyResult {
  bool pass = false;
  double worst_violation = 0.0;
};

/// Draw the `index`-th reproducible feasible point: uniform in the problem's
/// bounding box, projected onto C. Pure function of (seed, index).
Point sample_feasible(const VIProblem& problem, std::uint64_t seed, std::uint64_t index);

/// Brute-force check that x solves the variational inequality: over `samples`
/// random feasible y, require min over the tested values w in A(x) (the lower
/// end, midpoint and upper end of the image) of <w, y - x> to be >= -1e-6.
/// Returns the worst violation found. Parallelized over samples when built
/// with OpenMP; identical output to verify_solution_serial either way.
VerifyResult verify_solution(const VIProblem& problem, const Point& x, int samples,
                             std::uint64_t seed = 0);

/// Single-threaded reference implementation of verify_solution.
VerifyResult verify_solution_serial(const VIProblem& problem, const Point& x, int samples,
                                    std::uint64_t seed = 0);

}  // namespace mvi
