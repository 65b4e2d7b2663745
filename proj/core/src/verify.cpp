#include "radls/verify.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "radls/optimizers.hpp"
#include "radls/radial.hpp"
#include "radls/rng.hpp"

namespace radls::verify {

namespace {

std::string describe_case(const Problem& p, const Vec& x, const Vec& h,
                          const GridParams& g) {
  std::ostringstream out;
  out << p.name << " x=" << format_vec(x) << " h=" << format_vec(h)
      << " t0=" << g.t0 << " beta=" << g.beta << " max_steps=" << g.max_steps;
  return out.str();
}

Vec random_point(const BoxDomain& box, RngStream& rng) {
  Vec x(box.dim());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = rng.uniform(box.lower[j], box.upper[j]);
  }
  return x;
}

Vec random_direction(std::size_t n, RngStream& rng) {
  for (;;) {
    Vec h(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      h[j] = rng.uniform(-1.0, 1.0);
      nonzero = nonzero || h[j] != 0.0;
    }
    if (nonzero) return h;
  }
}

GridParams random_grid(RngStream& rng) {
  GridParams g;
  g.t0 = rng.uniform(0.02, 0.3);
  g.beta = rng.uniform(0.02, 0.3);
  g.max_steps = 50 + static_cast<long>(rng.uniform() * 400.0);
  return g;
}

// Direct scan of the probe set T = {t0 + k*beta} with the same truncation
// rules as the estimator, kept as a separate loop so the two code paths
// stay independent.
struct BruteScan {
  double value = 0.0;
  double t_star = 0.0;
  Vec endpoint;
  long probes = 0;
};

BruteScan brute_scan(const Problem& p, const Vec& x, const Vec& h,
                     const GridParams& g) {
  BruteScan out;
  out.endpoint = x;
  const double fx = p.objective(x);
  bool any = false;
  double min_q = 0.0, min_t = 0.0;
  for (long k = 0; k < g.max_steps; ++k) {
    const double t = g.t0 + static_cast<double>(k) * g.beta;
    Vec probe = ray_point(x, t, h);
    if (!p.domain.contains(probe)) break;
    const double q = (p.objective(probe) - fx) / t;
    ++out.probes;
    if (!any || q < min_q) {
      any = true;
      min_q = q;
      min_t = t;
    }
  }
  if (any) {
    out.value = min_q;
    if (min_q < 0.0) {
      out.t_star = min_t;
      out.endpoint = ray_point(x, min_t, h);
    }
  }
  return out;
}

// Lattice double with denominator 2^8; keeps linear-function arithmetic
// exact so the 8-ulp bound is meaningful.
double lattice(RngStream& rng, double lo, double hi) {
  const double span = (hi - lo) * 256.0;
  const auto steps = static_cast<long>(span);
  const auto k = static_cast<long>(rng.uniform() * static_cast<double>(steps + 1));
  return lo + static_cast<double>(std::min(k, steps)) / 256.0;
}

}  // namespace

std::uint64_t ulp_distance(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return ~std::uint64_t{0};
  if (a == b) return 0;
  auto ordered = [](double v) -> std::int64_t {
    auto bits = std::bit_cast<std::int64_t>(v);
    return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
  };
  const std::int64_t ia = ordered(a), ib = ordered(b);
  return ia > ib ? static_cast<std::uint64_t>(ia) - static_cast<std::uint64_t>(ib)
                 : static_cast<std::uint64_t>(ib) - static_cast<std::uint64_t>(ia);
}

SuiteResult registry_consistency(
    const std::vector<problems::BenchmarkEntry>& entries) {
  SuiteResult res{"registry_consistency", true, 0, ""};
  for (const auto& e : entries) {
    const Problem& p = e.problem;
    ++res.cases;
    if (!p.f_star || p.x_star.empty()) {
      res.passed = false;
      res.detail = p.name + ": missing f_star or x_star";
      return res;
    }
    for (const Vec& xs : p.x_star) {
      if (!p.domain.contains(xs)) {
        res.passed = false;
        res.detail = p.name + ": x_star " + format_vec(xs) + " outside the box";
        return res;
      }
      const double f = p.objective(xs);
      const double tol = 1e-6 * (1.0 + std::abs(*p.f_star));
      if (!(std::abs(f - *p.f_star) <= tol)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << p.name << ": f(x_star) = " << f << " but f_star = " << *p.f_star;
        res.passed = false;
        res.detail = msg.str();
        return res;
      }
    }
  }
  return res;
}

SuiteResult oracle_equivalence(const SuiteOptions& opts) {
  SuiteResult res{"oracle_equivalence", true, 0, ""};
  RngStream rng(opts.seed, 1);
  const auto& entries = problems::registry();
  for (long trial = 0; trial < opts.oracle_triples; ++trial) {
    const Problem& p =
        entries[static_cast<std::size_t>(rng.uniform() *
                                         static_cast<double>(entries.size()))]
            .problem;
    const Vec x = random_point(p.domain, rng);
    const Vec h = random_direction(p.dim(), rng);
    const GridParams g = random_grid(rng);
    ++res.cases;
    const RadialEstimate est = radial_epiderivative(p, x, h, g);
    const BruteScan ref = brute_scan(p, x, h, g);
    if (est.value != ref.value || est.t_star != ref.t_star ||
        est.probes != ref.probes || est.endpoint != ref.endpoint) {
      res.passed = false;
      res.detail = "mismatch on " + describe_case(p, x, h, g);
      return res;
    }
  }
  return res;
}

SuiteResult descent_soundness(const SuiteOptions& opts) {
  SuiteResult res{"descent_soundness", true, 0, ""};
  RngStream rng(opts.seed, 2);
  const auto& entries = problems::registry();
  for (long trial = 0; trial < opts.descent_calls; ++trial) {
    const Problem& p =
        entries[static_cast<std::size_t>(rng.uniform() *
                                         static_cast<double>(entries.size()))]
            .problem;
    const Vec x = random_point(p.domain, rng);
    const Vec h = random_direction(p.dim(), rng);
    GridParams g = random_grid(rng);
    g.max_steps = 50 + static_cast<long>(rng.uniform() * 150.0);
    ++res.cases;
    const RadialEstimate est = radial_epiderivative(p, x, h, g);
    std::string why;
    if (est.value < 0) {
      if (!p.domain.contains(est.endpoint)) {
        why = "endpoint outside the box";
      } else if (!(est.t_star > 0)) {
        why = "negative value with t_star = 0";
      } else if (est.endpoint != ray_point(x, est.t_star, h)) {
        why = "endpoint is not x + t_star*h";
      } else if (!(p.objective(est.endpoint) < p.objective(x))) {
        why = "endpoint does not improve f";
      }
    } else {
      if (est.endpoint != x) why = "nonnegative value moved the endpoint";
      if (est.t_star != 0.0) why = "nonnegative value with t_star != 0";
    }
    if (!why.empty()) {
      res.passed = false;
      res.detail = why + " on " + describe_case(p, x, h, g);
      return res;
    }
  }
  return res;
}

SuiteResult linear_exactness(const SuiteOptions& opts) {
  SuiteResult res{"linear_exactness", true, 0, ""};
  RngStream rng(opts.seed, 3);
  for (long trial = 0; trial < opts.linear_objectives; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 4.0);
    Vec c(n);
    for (auto& v : c) v = lattice(rng, -2.0, 2.0);
    Problem p;
    p.name = "linear";
    p.objective = [c](const Vec& x) { return dot(c, x); };
    p.domain = BoxDomain::cube(-5.0, 5.0, n);
    Vec x(n);
    for (auto& v : x) v = lattice(rng, -4.0, 4.0);
    Vec h(n, 0.0);
    bool nonzero = false;
    for (auto& v : h) {
      v = lattice(rng, -2.0, 2.0);
      nonzero = nonzero || v != 0.0;
    }
    if (!nonzero) h[0] = 1.0;
    GridParams g;
    g.t0 = lattice(rng, 1.0 / 256.0, 0.3);
    g.beta = lattice(rng, 1.0 / 256.0, 0.3);
    g.max_steps = 1 + static_cast<long>(rng.uniform() * 300.0);
    ++res.cases;
    const RadialEstimate est = radial_epiderivative(p, x, h, g);
    const double expected = dot(c, h);
    if (ulp_distance(est.value, expected) > 8) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "value " << est.value << " vs c.h " << expected << " on "
          << describe_case(p, x, h, g);
      res.passed = false;
      res.detail = msg.str();
      return res;
    }
  }
  return res;
}

SuiteResult concavity_inequality(const SuiteOptions& opts) {
  SuiteResult res{"concavity_inequality", true, 0, ""};
  RngStream rng(opts.seed, 4);
  const double box_half = 4.0;
  const long resolution = 400;
  const double t_max = 0.5 * box_half;
  for (long trial = 0; trial < opts.concavity_samples; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 2.0);
    Vec a(n), b(n);
    for (auto& v : a) v = rng.uniform(0.1, 3.0);
    for (auto& v : b) v = rng.uniform(-1.0, 1.0);
    Problem p;
    p.name = "concave_quadratic";
    p.objective = [a, b](const Vec& x) {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        s += b[j] * x[j] - a[j] * x[j] * x[j];
      }
      return s;
    };
    p.domain = BoxDomain::cube(-box_half, box_half, n);
    const Vec x(n, 0.0);
    const Vec d1 = random_direction(n, rng);
    const Vec d2 = random_direction(n, rng);
    const double lam = rng.uniform();
    Vec d(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = lam * d1[j] + (1.0 - lam) * d2[j];
      nonzero = nonzero || d[j] != 0.0;
    }
    if (!nonzero) continue;
    ++res.cases;
    const double lhs = radial_epiderivative_oracle(p, x, d, t_max, resolution);
    const double r1 = radial_epiderivative_oracle(p, x, d1, t_max, resolution);
    const double r2 = radial_epiderivative_oracle(p, x, d2, t_max, resolution);
    double a_max = 0.0;
    for (double v : a) a_max = std::max(a_max, v);
    const double sq =
        std::max({dot(d1, d1), dot(d2, d2), dot(d, d)});
    const double tol = 10.0 * (t_max / static_cast<double>(resolution)) *
                       (a_max * sq);
    if (!(lhs >= lam * r1 + (1.0 - lam) * r2 - tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "lhs " << lhs << " rhs " << lam * r1 + (1.0 - lam) * r2
          << " tol " << tol << " lambda " << lam << " d1 " << format_vec(d1)
          << " d2 " << format_vec(d2);
      res.passed = false;
      res.detail = msg.str();
      return res;
    }
  }
  return res;
}

SuiteResult optimum_lower_bound(const SuiteOptions& opts) {
  SuiteResult res{"optimum_lower_bound", true, 0, ""};
  RngStream rng(opts.seed, 5);
  for (const auto& e : problems::registry()) {
    const Problem& p = e.problem;
    const double bound = *p.f_star - 1e-9 * (1.0 + std::abs(*p.f_star));
    for (long s = 0; s < opts.lower_bound_samples; ++s) {
      const Vec x = random_point(p.domain, rng);
      const double f = p.objective(x);
      ++res.cases;
      if (!(f >= bound)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << p.name << ": f" << format_vec(x) << " = " << f
            << " below f_star = " << *p.f_star;
        res.passed = false;
        res.detail = msg.str();
        return res;
      }
    }
  }
  return res;
}

SuiteResult box_respect() {
  SuiteResult res{"box_respect", true, 0, ""};
  for (const auto& e : problems::registry()) {
    const Problem& p = e.problem;
    std::vector<Vec> outside;
    Vec above = p.domain.upper;
    above[0] += 1.0;
    outside.push_back(above);
    Vec below = p.domain.lower;
    below.back() -= 0.5;
    outside.push_back(below);
    for (const Vec& x : outside) {
      ++res.cases;
      bool threw = false;
      try {
        problems::evaluate(p.name, x);
      } catch (const SpecError&) {
        threw = true;
      }
      if (!threw) {
        res.passed = false;
        res.detail = p.name + ": evaluate accepted " + format_vec(x);
        return res;
      }
    }
  }
  return res;
}

SuiteResult optimizer_invariants(const SuiteOptions& opts) {
  SuiteResult res{"optimizer_invariants", true, 0, ""};
  const GridParams grid;
  const StopConfig stop;
  auto fail = [&res](const std::string& msg) {
    res.passed = false;
    res.detail = msg;
    return res;
  };
  auto monotone = [](const std::vector<TracePoint>& tr) {
    for (std::size_t i = 1; i < tr.size(); ++i) {
      if (tr[i].best_f > tr[i - 1].best_f) return false;
    }
    return true;
  };

  // Stationarity: started at the optimum, the coordinate search never
  // moves and stops after count_bar stalls.
  {
    const Problem& sphere = problems::find("Sphere").problem;
    ++res.cases;
    RunResult r = rcc_minimize(sphere, grid, stop, Vec{0.0, 0.0}, true);
    if (r.best_x != Vec{0.0, 0.0}) return fail("rcc moved away from the optimum");
    if (r.iterations != stop.count_bar) {
      return fail("rcc at the optimum ran " + std::to_string(r.iterations) +
                  " iterations, expected count_bar");
    }
    if (!monotone(r.trace)) return fail("rcc trace is not monotone");
  }

  // Exact evaluation accounting across all five optimizers.
  {
    const Problem& base = problems::find("Trid").problem;
    std::int64_t external = 0;
    Problem wrapped = base;
    wrapped.objective = [&external, f = base.objective](const Vec& x) {
      ++external;
      return f(x);
    };
    SwarmConfig small;
    small.particles = 5;
    StopConfig short_stop;
    short_stop.iteration_limit = 30;
    short_stop.count_bar = 1;  // accounting identity, not solution quality

    struct Case {
      const char* name;
      std::function<RunResult()> run;
    };
    const std::vector<Case> cases = {
        {"rcc", [&] { return rcc_minimize(wrapped, grid, short_stop); }},
        {"cc", [&] { return cc_minimize(wrapped, short_stop, grid); }},
        {"pso", [&] { return pso_minimize(wrapped, small, short_stop, opts.seed); }},
        {"rpso",
         [&] { return rpso_minimize(wrapped, small, grid, short_stop, opts.seed); }},
        {"radial_descent",
         [&] {
           auto axes = [](const Vec& x) {
             std::vector<Vec> dirs;
             for (std::size_t i = 0; i < x.size(); ++i) {
               dirs.push_back(axis_direction(x.size(), i, +1.0));
               dirs.push_back(axis_direction(x.size(), i, -1.0));
             }
             return dirs;
           };
           return radial_descent_minimize(wrapped, axes, grid, short_stop);
         }},
    };
    for (const auto& c : cases) {
      external = 0;
      ++res.cases;
      RunResult r = c.run();
      if (r.evaluations != external) {
        return fail(std::string(c.name) + " reported " +
                    std::to_string(r.evaluations) + " evaluations, actual " +
                    std::to_string(external));
      }
      if (!problems::find("Trid").problem.domain.contains(r.best_x)) {
        return fail(std::string(c.name) + " returned an infeasible point");
      }
    }
  }

  // Replay determinism for the seeded searches.
  {
    const Problem& p = problems::find("Rastrigin").problem;
    SwarmConfig cfg;
    cfg.particles = 8;
    StopConfig short_stop;
    short_stop.iteration_limit = 40;
    short_stop.count_bar = 1;
    ++res.cases;
    RunResult a = rpso_minimize(p, cfg, grid, short_stop, opts.seed, true);
    RunResult b = rpso_minimize(p, cfg, grid, short_stop, opts.seed, true);
    if (a.best_f != b.best_f || a.best_x != b.best_x ||
        a.evaluations != b.evaluations || a.iterations != b.iterations) {
      return fail("rpso replay with an equal seed diverged");
    }
    if (!monotone(a.trace)) return fail("rpso trace is not monotone");
  }

  return res;
}

std::vector<SuiteResult> run_all(const SuiteOptions& opts) {
  return {
      registry_consistency(problems::registry()),
      oracle_equivalence(opts),
      descent_soundness(opts),
      linear_exactness(opts),
      concavity_inequality(opts),
      optimum_lower_bound(opts),
      box_respect(),
      optimizer_invariants(opts),
  };
}

}  // namespace radls::verify
