#include "mvi/examples.hpp"

#include "mvi/feasibility.hpp"

namespace mvi {

VIProblem build_example41() {
  VIProblem p;
  p.dim = 2;
  p.sample_lo = {0.0, 0.0};
  p.sample_hi = {10.0, 10.0};
  p.set = box_set(p.sample_lo, p.sample_hi);
  p.map = interval_map(
      [](const Point& x) { return Point{x[0] * x[0], x[1] * x[1]}; },
      Point{1.0, 0.0}, 0.0, 0.2, "A(x) = {(x1^2 + t, x2^2) : t in [0, 0.2]}");
  p.known_solution = Point{0.0, 0.0};
  return p;
}

VIProblem build_example42() {
  VIProblem p;
  p.dim = 4;
  p.sample_lo = Point(4, -10.0);
  p.sample_hi = Point(4, 10.0);
  p.set = hyperplane_box_set(p.sample_lo, p.sample_hi, 1.0);
  p.map = interval_map(
      [](const Point& x) { return Point{x[0], x[0], x[0], x[0]}; },
      Point{1.0, 0.0, 0.0, 0.0}, 0.1, 0.2,
      "A(x) = {(t + x1, x1, x1, x1) : t in [0.1, 0.2]}");
  return p;
}

}  // namespace mvi
