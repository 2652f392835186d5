#pragma once

#include "mvi/problem.hpp"

namespace mvi {

/// C = [0,10]^2, A(x) = { (x1^2 + t, x2^2) : t in [0, 1/5] }.
/// The origin solves the problem; it is recorded as known_solution.
VIProblem build_example41();

/// C = { x in R^4 : sum(x) = 1, -10 <= x_i <= 10 },
/// A(x) = { (t + x1, x1, x1, x1) : t in [1/10, 1/5] }.
/// The solution set is the face x1 = -10; no single known_solution is set.
VIProblem build_example42();

}  // namespace mvi
