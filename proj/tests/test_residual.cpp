#include <doctest.h>

#include <random>

#include "mvi/examples.hpp"
#include "mvi/feasibility.hpp"
#include "mvi/residual.hpp"
#include "oracles.hpp"

using namespace mvi;

namespace {
const FeasibleSet kBox = box_set({0.0, 0.0}, {10.0, 10.0});
}

TEST_CASE("residual vanishes for feasible x with zero operator value") {
  const Residual r = residual(kBox, {3.0, 4.0}, {0.0, 0.0}, 1.0);
  CHECK(r.vector == Point{0.0, 0.0});
  CHECK(r.norm == 0.0);
}

TEST_CASE("residual on the box, hand-evaluated") {
  // P_C((1,1) - (2,2)) = (0,0), so r = (1,1)
  const Residual r = residual(kBox, {1.0, 1.0}, {2.0, 2.0}, 1.0);
  CHECK(r.vector == Point{1.0, 1.0});
  CHECK(r.norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.mu == 1.0);
}

TEST_CASE("the origin solves the first example problem") {
  const VIProblem p = build_example41();
  for (double t : {0.0, 0.1, 0.2}) {
    const Residual r = residual(p.set, {0.0, 0.0}, {t, 0.0}, 1.0);
    CHECK(r.norm == 0.0);
  }
}

TEST_CASE("residual rejects bad arguments") {
  CHECK_THROWS_AS(residual(kBox, {1.0, 1.0}, {1.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(residual(kBox, {1.0, 1.0}, {1.0, 1.0}, -1.0), std::invalid_argument);
  const FeasibleSet no_proj = box_set({0.0, 0.0}, {10.0, 10.0}, false);
  CHECK_THROWS_AS(residual(no_proj, {1.0, 1.0}, {1.0, 1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("scaling bounds collapse to equality at mu = 1") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Point x = oracles::random_point(rng, 2, -20.0, 20.0);
    const Point w = oracles::random_point(rng, 2, -20.0, 20.0);
    CHECK(scaling_bounds_check(kBox, x, w, 1.0));
  }
}

TEST_CASE("scaling bounds on a hand-evaluated instance") {
  // r_0.5 and r_1 both equal (1,1) here
  CHECK(residual(kBox, {1.0, 1.0}, {2.0, 2.0}, 0.5).norm ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(scaling_bounds_check(kBox, {1.0, 1.0}, {2.0, 2.0}, 0.5));
}

TEST_CASE("scaling bounds hold on random instances of both built-in sets") {
  const FeasibleSet sets[] = {kBox,
                              hyperplane_box_set(Point(4, -10.0), Point(4, 10.0), 1.0)};
  const std::size_t dims[] = {2, 4};
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> mu_dist(1e-3, 1.0 - 1e-3);
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k < 500; ++k) {
      const Point x = oracles::random_point(rng, dims[c], -25.0, 25.0);
      const Point w = oracles::random_point(rng, dims[c], -25.0, 25.0);
      CHECK(scaling_bounds_check(sets[c], x, w, mu_dist(rng)));
    }
  }
}

TEST_CASE("residual is continuous in its arguments") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> bump(-1e-8, 1e-8);
  for (int k = 0; k < 200; ++k) {
    const Point x = oracles::random_point(rng, 2, -20.0, 20.0);
    const Point w = oracles::random_point(rng, 2, -20.0, 20.0);
    const double mu = 0.3;
    Point x2 = x, w2 = w;
    for (double& v : x2) v += bump(rng);
    for (double& v : w2) v += bump(rng);
    const double n1 = residual(kBox, x, w, mu).norm;
    const double n2 = residual(kBox, x2, w2, mu).norm;
    CHECK(std::abs(n1 - n2) <= 1e-6);
  }
}
