#include <doctest.h>

#include <cmath>
#include <limits>

#include "radls/problems.hpp"
#include "radls/radial.hpp"
#include "radls/rng.hpp"

using namespace radls;

namespace {

Problem sphere2() { return problems::find("Sphere").problem; }

Problem constant_problem(double c) {
  Problem p;
  p.name = "const";
  p.objective = [c](const Vec&) { return c; };
  p.domain = BoxDomain::cube(-1.0, 1.0, 2);
  return p;
}

GridParams tenth_grid() {
  GridParams g;
  g.t0 = 0.1;
  g.beta = 0.1;
  return g;
}

}  // namespace

TEST_CASE("sphere probe from (1,0) toward the origin") {
  // f(x) = x1^2 + x2^2, so the quotient along h=(-1,0) is t - 2,
  // increasing in t: the minimum sits at the first grid point.
  auto est = radial_epiderivative(sphere2(), {1.0, 0.0}, {-1.0, 0.0},
                                  tenth_grid());
  CHECK(est.value == doctest::Approx(-1.9).epsilon(1e-12));
  CHECK(est.t_star == 0.1);
  REQUIRE(est.endpoint.size() == 2);
  CHECK(est.endpoint[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(est.endpoint[1] == 0.0);
  CHECK(est.probes > 0);
}

TEST_CASE("constant objective yields no descent") {
  auto est = radial_epiderivative(constant_problem(5.0), {0.25, -0.5},
                                  {1.0, 0.0}, tenth_grid());
  CHECK(est.value == 0.0);
  CHECK(est.t_star == 0.0);
  CHECK(est.endpoint == Vec{0.25, -0.5});
}

TEST_CASE("linear objective reproduces c.h with t_star at t0") {
  Problem p;
  p.name = "lin";
  p.objective = [](const Vec& x) { return 3.0 * x[0] - x[1]; };
  p.domain = BoxDomain::cube(-10.0, 10.0, 2);
  auto est = radial_epiderivative(p, {0.0, 0.0}, {0.0, 1.0}, tenth_grid());
  // Quotient is identically -1; ties resolve to the smallest t.
  CHECK(est.value == -1.0);
  CHECK(est.t_star == 0.1);
  CHECK(est.endpoint[0] == 0.0);
  CHECK(est.endpoint[1] == doctest::Approx(0.1));
}

TEST_CASE("concave 1-d parabola pushes t_star to the box edge") {
  Problem p;
  p.name = "ncv";
  p.objective = [](const Vec& x) { return -x[0] * x[0]; };
  p.domain = BoxDomain::cube(-1.0, 1.0, 1);
  auto est = radial_epiderivative(p, {0.0}, {1.0}, tenth_grid());
  // Quotient -t is minimized at the last feasible grid point t = 1.
  CHECK(est.value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(est.t_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(est.endpoint[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("first probe infeasible gives the empty-grid result") {
  Problem p = sphere2();
  Vec corner{5.12, 5.12};
  auto est = radial_epiderivative(p, corner, {1.0, 0.0}, tenth_grid());
  CHECK(est.value == 0.0);
  CHECK(est.t_star == 0.0);
  CHECK(est.endpoint == corner);
  CHECK(est.probes == 0);
}

TEST_CASE("max_steps caps the probe count") {
  GridParams g = tenth_grid();
  g.max_steps = 7;
  auto est = radial_epiderivative(sphere2(), {0.0, 0.0}, {1.0, 0.0}, g);
  CHECK(est.probes == 7);
}

TEST_CASE("precondition violations throw") {
  Problem p = sphere2();
  GridParams g = tenth_grid();
  CHECK_THROWS_AS(radial_epiderivative(p, {6.0, 0.0}, {1.0, 0.0}, g),
                  SpecError);
  CHECK_THROWS_AS(radial_epiderivative(p, {0.0, 0.0}, {0.0, 0.0}, g),
                  SpecError);
  GridParams bad = g;
  bad.t0 = -1.0;
  CHECK_THROWS_AS(radial_epiderivative(p, {0.0, 0.0}, {1.0, 0.0}, bad),
                  SpecError);
}

TEST_CASE("non-finite objective value names the probe point") {
  Problem p;
  p.name = "poison";
  p.objective = [](const Vec& x) {
    return x[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x[0];
  };
  p.domain = BoxDomain::cube(-1.0, 1.0, 1);
  try {
    radial_epiderivative(p, {0.0}, {1.0}, tenth_grid());
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(std::string(e.what()).find("0.6") != std::string::npos);
  }
}

TEST_CASE("ray_point is the shared probe formula") {
  Vec p = ray_point({1.0, -2.0}, 0.3, {0.0, 1.0});
  CHECK(p[0] == 1.0);
  CHECK(p[1] == doctest::Approx(-1.7));
}

TEST_CASE("oracle approaches the analytic epiderivative on Sphere") {
  double v = radial_epiderivative_oracle(sphere2(), {1.0, 0.0}, {-1.0, 0.0},
                                         2.0, 100000);
  // inf of t - 2 over (0, 2] is -2; the finest probe t = 2e-5 gives
  // -1.99998.
  CHECK(v == doctest::Approx(-1.99998).epsilon(1e-9));
}

TEST_CASE("oracle on constant and linear objectives") {
  CHECK(radial_epiderivative_oracle(constant_problem(3.0), {0.0, 0.0},
                                    {1.0, 0.0}, 0.5, 100) == 0.0);
  Problem lin;
  lin.name = "lin";
  lin.objective = [](const Vec& x) { return 2.0 * x[0] + x[1]; };
  lin.domain = BoxDomain::cube(-10.0, 10.0, 2);
  double v = radial_epiderivative_oracle(lin, {0.0, 0.0}, {0.0, 1.0}, 1.0, 37);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle skips infeasible probes instead of truncating") {
  // From x = 0.5 toward +1 the box edge is at t = 0.5; a t_max of 2 must
  // still see the feasible prefix.
  Problem p;
  p.name = "edge";
  p.objective = [](const Vec& x) { return -x[0]; };
  p.domain = BoxDomain::cube(-1.0, 1.0, 1);
  double v = radial_epiderivative_oracle(p, {0.5}, {1.0}, 2.0, 1000);
  CHECK(v == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("estimate never undercuts a lower-Lipschitz bound") {
  Problem p = sphere2();
  p.lipschitz_lower = 2.0 * 5.12 * std::sqrt(2.0) + 1.0;
  GridParams g = tenth_grid();
  RngStream rng(5);
  for (int i = 0; i < 200; ++i) {
    Vec x{rng.uniform(-5.12, 5.12), rng.uniform(-5.12, 5.12)};
    double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
    double n = std::hypot(a, b);
    if (n == 0.0) continue;
    Vec h{a / n, b / n};
    auto est = radial_epiderivative(p, x, h, g);
    CHECK(est.value >= -*p.lipschitz_lower * norm(h) - 1e-9);
  }
}
