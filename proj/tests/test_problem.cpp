#include <doctest.h>

#include <random>

#include "mvi/examples.hpp"
#include "mvi/feasibility.hpp"
#include "mvi/problem.hpp"
#include "oracles.hpp"

using namespace mvi;

TEST_CASE("membership on the box [0,10]^2") {
  const FeasibleSet set = box_set({0.0, 0.0}, {10.0, 10.0});
  CHECK(membership(set, {5.0, 5.0}));
  CHECK_FALSE(membership(set, {-1.0, 5.0}));  // g = 1
  CHECK(membership(set, {0.0, 0.0}));         // boundary, g = 0
  CHECK(set.constraint({-1.0, 5.0}) == doctest::Approx(1.0));
}

TEST_CASE("deterministic selection strategies are pure functions") {
  const VIProblem p = build_example41();
  const Point x{2.0, 3.0};
  for (auto strategy : {SelectionStrategy::Midpoint, SelectionStrategy::LowerEnd,
                        SelectionStrategy::UpperEnd}) {
    SelectionContext a{strategy, 7, 3};
    SelectionContext b{strategy, 99, 12};  // seed/iteration must not matter
    CHECK(p.map.select(x, a) == p.map.select(x, b));
  }
}

TEST_CASE("seeded random selection is reproducible and in range") {
  CHECK(pick_from_interval({SelectionStrategy::SeededRandom, 42, 5}, 0.0, 0.2) ==
        pick_from_interval({SelectionStrategy::SeededRandom, 42, 5}, 0.0, 0.2));
  bool saw_difference = false;
  for (int it = 0; it < 8; ++it) {
    const double t = pick_from_interval({SelectionStrategy::SeededRandom, 42, it}, 0.1, 0.2);
    CHECK(t >= 0.1);
    CHECK(t <= 0.2);
    if (t != pick_from_interval({SelectionStrategy::SeededRandom, 42, 0}, 0.1, 0.2)) {
      saw_difference = true;
    }
  }
  CHECK(saw_difference);
}

TEST_CASE("subgradient inequality holds on the built-in sets") {
  struct Case {
    FeasibleSet set;
    std::size_t dim;
  };
  const Case cases[] = {
      {box_set({0.0, 0.0}, {10.0, 10.0}), 2},
      {hyperplane_box_set(Point(4, -10.0), Point(4, 10.0), 1.0), 4},
  };
  std::mt19937_64 rng(1234);
  for (const Case& c : cases) {
    for (int k = 0; k < 1000; ++k) {
      const Point x = oracles::random_point(rng, c.dim, -30.0, 30.0);
      const Point y = oracles::random_point(rng, c.dim, -30.0, 30.0);
      const Point w = c.set.subgradient(x);
      const double lhs = c.set.constraint(y);
      const double rhs = c.set.constraint(x) + dot(w, sub(y, x));
      CHECK(lhs >= rhs - 1e-10);
    }
  }
}

TEST_CASE("nearest of a selected member is the member itself") {
  const VIProblem problems[] = {build_example41(), build_example42()};
  std::mt19937_64 rng(99);
  for (const VIProblem& p : problems) {
    for (int k = 0; k < 50; ++k) {
      const Point y = oracles::random_point(rng, static_cast<std::size_t>(p.dim), -5.0, 5.0);
      for (auto strategy : {SelectionStrategy::Midpoint, SelectionStrategy::LowerEnd,
                            SelectionStrategy::UpperEnd}) {
        const SelectionContext ctx{strategy, 0, k};
        const Point u = p.map.select(y, ctx);
        const Point back = p.map.nearest(y, u);
        for (int i = 0; i < p.dim; ++i) {
          CHECK(std::abs(back[i] - u[i]) <= 1e-15);
        }
      }
    }
  }
}

TEST_CASE("interval_map clamps the implied parameter") {
  const SetValuedMap map = interval_map(
      [](const Point& x) { return x; }, Point{1.0, 0.0}, 0.1, 0.2, "test");
  const Point y{0.0, 0.0};
  // u far below the segment: clamp to t = 0.1
  CHECK(map.nearest(y, {-5.0, 0.0}) == Point{0.1, 0.0});
  // u far above: clamp to t = 0.2
  CHECK(map.nearest(y, {5.0, 0.0}) == Point{0.2, 0.0});
  // interior value is recovered exactly
  CHECK(map.nearest(y, {0.15, 0.0}) == Point{0.15, 0.0});
  CHECK_THROWS_AS(interval_map([](const Point& x) { return x; }, Point{0.0, 0.0}, 0.0, 1.0, ""),
                  std::invalid_argument);
}
