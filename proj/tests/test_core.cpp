#include <doctest.h>

#include <cmath>
#include <limits>

#include "radls/core.hpp"
#include "radls/rng.hpp"

using namespace radls;

TEST_CASE("clamp_to_box projects coordinate-wise") {
  BoxDomain box = BoxDomain::cube(-5.12, 5.12, 2);
  CHECK(clamp_to_box({6.0, 0.0}, box) == Vec{5.12, 0.0});
  CHECK(clamp_to_box({0.0, 0.0}, box) == Vec{0.0, 0.0});

  BoxDomain wide({-5.0, -5.0}, {10.0, 10.0});
  CHECK(clamp_to_box({-7.0, 11.0}, wide) == Vec{-5.0, 10.0});
}

TEST_CASE("clamp_to_box is idempotent") {
  BoxDomain box({-1.0, 0.0, 2.0}, {1.0, 0.5, 3.0});
  RngStream rng(7);
  for (int i = 0; i < 200; ++i) {
    Vec x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
          rng.uniform(-10.0, 10.0)};
    Vec once = clamp_to_box(x, box);
    CHECK(box.contains(once));
    CHECK(clamp_to_box(once, box) == once);
  }
}

TEST_CASE("clamp_to_box rejects bad input") {
  BoxDomain box = BoxDomain::cube(0.0, 1.0, 2);
  CHECK_THROWS_AS(clamp_to_box({1.0}, box), SpecError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(clamp_to_box({nan, 0.0}, box), SpecError);
}

TEST_CASE("distance examples") {
  CHECK(distance({0.0, 0.0}, {3.0, 4.0}) == 5.0);
  CHECK(distance({1.0, 1.0}, {1.0, 1.0}) == 0.0);
  CHECK(distance({-1.0, 0.0}, {1.0, 0.0}) == 2.0);
  CHECK_THROWS_AS(distance({1.0}, {1.0, 2.0}), SpecError);
}

TEST_CASE("distance triangle inequality on random triples") {
  RngStream rng(11);
  for (int i = 0; i < 500; ++i) {
    Vec a{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    Vec b{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    Vec c{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    CHECK(distance(a, b) == distance(b, a));
  }
}

TEST_CASE("box domain accessors") {
  BoxDomain box({-2.0, 0.0}, {4.0, 10.0});
  CHECK(box.dim() == 2);
  CHECK(box.midpoint() == Vec{1.0, 5.0});
  CHECK(box.corner(0) == Vec{-2.0, 0.0});
  CHECK(box.corner(1) == Vec{4.0, 0.0});
  CHECK(box.corner(2) == Vec{-2.0, 10.0});
  CHECK(box.corner(3) == Vec{4.0, 10.0});
  CHECK(box.contains({0.0, 0.0}));
  CHECK(box.contains({4.0, 10.0}));  // boundary included
  CHECK_FALSE(box.contains({4.0001, 0.0}));
  CHECK_THROWS_AS(BoxDomain({1.0}, {0.0}), SpecError);  // lower > upper
}

TEST_CASE("degenerate box (pinned coordinate) is allowed") {
  BoxDomain box({0.0, 3.0}, {1.0, 3.0});
  CHECK(box.contains({0.5, 3.0}));
  CHECK(box.midpoint() == Vec{0.5, 3.0});
}

TEST_CASE("axis_direction") {
  CHECK(axis_direction(3, 1, -1.0) == Vec{0.0, -1.0, 0.0});
  CHECK(axis_direction(2, 0, 1.0) == Vec{1.0, 0.0});
  CHECK_THROWS_AS(axis_direction(2, 2, 1.0), SpecError);
}

TEST_CASE("grid and stop parameter validation") {
  GridParams g;
  CHECK_NOTHROW(g.validate());
  g.t0 = 0.0;
  CHECK_THROWS_AS(g.validate(), SpecError);
  g = GridParams{};
  g.beta = -0.1;
  CHECK_THROWS_AS(g.validate(), SpecError);
  g = GridParams{};
  g.alpha = 1.5;  // must shrink
  CHECK_THROWS_AS(g.validate(), SpecError);
  g = GridParams{};
  g.max_steps = 0;
  CHECK_THROWS_AS(g.validate(), SpecError);

  StopConfig s;
  CHECK_NOTHROW(s.validate());
  s.iteration_limit = 0;
  CHECK_THROWS_AS(s.validate(), SpecError);
  s = StopConfig{};
  s.count_bar = 0;
  CHECK_THROWS_AS(s.validate(), SpecError);
}

TEST_CASE("grid shrink scales both steps") {
  GridParams g;
  g.t0 = 0.1;
  g.beta = 0.1;
  g.alpha = 0.1;
  g.shrink();
  CHECK(g.t0 == doctest::Approx(0.01));
  CHECK(g.beta == doctest::Approx(0.01));
}

TEST_CASE("rng replay: equal (seed, stream) gives equal draws") {
  RngStream a(42, 3), b(42, 3);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(a.next_u32() == b.next_u32());
  }
}

TEST_CASE("rng streams with different ids diverge") {
  RngStream a(42, 0), b(42, 1);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    if (a.next_u32() == b.next_u32()) ++equal;
  }
  CHECK(equal < 5);
}

TEST_CASE("rng uniform stays in range") {
  RngStream rng(123);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
  }
}

TEST_CASE("vector helpers") {
  CHECK(dot({1.0, 2.0}, {3.0, -1.0}) == 1.0);
  CHECK(norm({3.0, 4.0}) == 5.0);
  CHECK(all_finite({1.0, 2.0}));
  CHECK_FALSE(all_finite({1.0, std::numeric_limits<double>::infinity()}));
}
