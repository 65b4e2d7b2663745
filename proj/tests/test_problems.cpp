#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "radls/problems.hpp"
#include "radls/rng.hpp"

using namespace radls;
using problems::concave_variant;
using problems::evaluate;
using problems::find;
using problems::registry;

TEST_CASE("registry holds the 29 problems ordered by name") {
  const auto& entries = registry();
  REQUIRE(entries.size() == 29);
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) {
                         return a.problem.name < b.problem.name;
                       }));
  for (const auto& e : entries) {
    CAPTURE(e.problem.name);
    CHECK(e.problem.dim() == 2);
    REQUIRE(e.problem.f_star.has_value());
    for (const Vec& xs : e.problem.x_star) {
      CHECK(e.problem.domain.contains(xs));
    }
  }
}

TEST_CASE("registry spot checks") {
  const auto& sphere = find("Sphere").problem;
  CHECK(sphere.domain.lower == Vec{-5.12, -5.12});
  CHECK(sphere.domain.upper == Vec{5.12, 5.12});
  CHECK(*sphere.f_star == 0.0);
  REQUIRE_FALSE(sphere.x_star.empty());
  CHECK(sphere.x_star[0] == Vec{0.0, 0.0});

  const auto& egg = find("EggHolder").problem;
  CHECK(egg.domain.lower == Vec{-512.0, -512.0});
  CHECK(*egg.f_star == doctest::Approx(-959.6407).epsilon(1e-6));
  REQUIRE_FALSE(egg.x_star.empty());
  CHECK(egg.x_star[0][0] == 512.0);
  CHECK(egg.x_star[0][1] == doctest::Approx(404.2319));

  const auto& step_int = find("StepInt").problem;
  CHECK(*step_int.f_star == 13.0);
  REQUIRE_FALSE(step_int.x_star.empty());
  CHECK(step_int.x_star[0] == Vec{-5.12, -5.12});
}

TEST_CASE("evaluate matches hand-computed values") {
  CHECK(evaluate("Giunta", {0.46732, 0.46732}) ==
        doctest::Approx(0.06447).epsilon(1e-4));
  CHECK(evaluate("Trid", {2.0, 2.0}) == -2.0);
  CHECK(evaluate("Periodic", {0.0, 0.0}) == doctest::Approx(0.9));
  CHECK(evaluate("Rastrigin", {0.0, 0.0}) == 0.0);
  CHECK(evaluate("Qing", {1.0, 1.41421356}) <= 1e-8);
  CHECK(evaluate("Sphere", {1.0, 2.0}) == 5.0);
}

TEST_CASE("evaluate rejects unknown names and infeasible points") {
  CHECK_THROWS_AS(evaluate("NoSuchProblem", {0.0, 0.0}), SpecError);
  CHECK_THROWS_AS(evaluate("Sphere", {100.0, 0.0}), SpecError);
  CHECK_THROWS_AS(evaluate("Sphere", {0.0}), SpecError);
  CHECK_FALSE(problems::has("NoSuchProblem"));
  CHECK(problems::has("WWavy"));
}

TEST_CASE("optimum consistency across the registry") {
  for (const auto& e : registry()) {
    CAPTURE(e.problem.name);
    if (e.problem.x_star.empty()) continue;
    const double tol = 1e-6 * (1.0 + std::abs(*e.problem.f_star));
    double best = std::numeric_limits<double>::infinity();
    // Multi-modal entries may list several minimizers; any one must do.
    for (const Vec& xs : e.problem.x_star) {
      best = std::min(best, std::abs(e.problem.objective(xs) - *e.problem.f_star));
    }
    CHECK(best <= tol);
  }
}

TEST_CASE("symmetry spot checks") {
  RngStream rng(99);
  // All four are coordinate-exchange symmetric; Csendes is excluded from
  // the sign-flip check because its sin(1/x) factor is odd in x.
  for (const char* name : {"Sphere", "Rastrigin", "Ackley1", "Csendes"}) {
    const auto& p = find(name).problem;
    const bool even = std::string(name) != "Csendes";
    for (int i = 0; i < 50; ++i) {
      double a = rng.uniform(p.domain.lower[0] * 0.99, p.domain.upper[0] * 0.99);
      double b = rng.uniform(p.domain.lower[1] * 0.99, p.domain.upper[1] * 0.99);
      CAPTURE(name);
      CAPTURE(a);
      CAPTURE(b);
      if (even) {
        CHECK(p.objective({a, b}) == doctest::Approx(p.objective({-a, -b})));
      }
      CHECK(p.objective({a, b}) == doctest::Approx(p.objective({b, a})));
    }
  }
}

TEST_CASE("make_problem generalizes the separable functions") {
  Problem p = problems::make_problem("Sphere", 3);
  CHECK(p.dim() == 3);
  CHECK(p.objective({1.0, 2.0, 3.0}) == 14.0);
  // Strictly two-dimensional formula.
  CHECK_THROWS_AS(problems::make_problem("DropWave", 3), SpecError);
  // The pairwise-chain formulas generalize.
  CHECK_NOTHROW(problems::make_problem("EggHolder", 3));
}

TEST_CASE("concave variants negate over the same box") {
  const auto& names = problems::concave_names();
  CHECK(names.size() == 9);
  for (const auto& n : names) {
    CAPTURE(n);
    Problem c = concave_variant(n);
    const Problem& base = find(n).problem;
    CHECK(c.domain.lower == base.domain.lower);
    CHECK(c.domain.upper == base.domain.upper);
    CHECK(c.tags.count("concave-variant") == 1);
    Vec mid = c.domain.midpoint();
    CHECK(c.objective(mid) == doctest::Approx(-base.objective(mid)));

    // f_star must equal the smallest negated value over the 4 vertices,
    // attained at a stored minimizing vertex.
    REQUIRE(c.f_star.has_value());
    double vmin = std::numeric_limits<double>::infinity();
    for (unsigned m = 0; m < 4; ++m) {
      vmin = std::min(vmin, c.objective(c.domain.corner(m)));
    }
    CHECK(*c.f_star == doctest::Approx(vmin).epsilon(1e-12));
    REQUIRE_FALSE(c.x_star.empty());
    CHECK(c.objective(c.x_star[0]) == doctest::Approx(*c.f_star).epsilon(1e-12));
  }
}

TEST_CASE("concave variant reference optima") {
  CHECK(*concave_variant("SumSquares").f_star == doctest::Approx(-300.0));
  CHECK(*concave_variant("ChungReynolds").f_star == doctest::Approx(-4e8));
  CHECK(*concave_variant("SchumerSteiglitz").f_star == doctest::Approx(-2e8));
  CHECK(*concave_variant("Brent").f_star == doctest::Approx(-800.0));
  CHECK(*concave_variant("Sphere").f_star == doctest::Approx(-52.4288));
  CHECK_THROWS_AS(concave_variant("EggHolder"), SpecError);
  CHECK_THROWS_AS(concave_variant("nope"), SpecError);
}
