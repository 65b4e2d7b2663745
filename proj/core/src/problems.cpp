#include "radls/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace radls::problems {

namespace {

constexpr double kPi = std::numbers::pi;

double ackley1(const Vec& x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
         std::exp(1.0);
}

double alpine1(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v * std::sin(v) + 0.1 * v);
  return s;
}

double brent(const Vec& x) {
  const double a = x[0] + 10.0, b = x[1] + 10.0;
  return a * a + b * b + std::exp(-x[0] * x[0] - x[1] * x[1]);
}

double brown(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i] * x[i], b = x[i + 1] * x[i + 1];
    s += std::pow(a, b + 1.0) + std::pow(b, a + 1.0);
  }
  return s;
}

double chung_reynolds(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s * s;
}

double csendes(const Vec& x) {
  for (double v : x) {
    if (v == 0.0) return 0.0;
  }
  double s = 0.0;
  for (double v : x) {
    const double v3 = v * v * v;
    s += v3 * v3 * (std::sin(1.0 / v) + 2.0);
  }
  return s;
}

double deb1(const Vec& x) {
  double s = 0.0;
  for (double v : x) {
    const double t = std::sin(5.0 * kPi * v);
    const double t2 = t * t;
    s += t2 * t2 * t2;
  }
  return -s / static_cast<double>(x.size());
}

double deb2(const Vec& x) {
  double s = 0.0;
  for (double v : x) {
    const double t = std::sin(5.0 * kPi * (std::pow(v, 0.75) - 0.05));
    const double t2 = t * t;
    s += t2 * t2 * t2;
  }
  return -s / static_cast<double>(x.size());
}

double dixon_price(const Vec& x) {
  double s = (x[0] - 1.0) * (x[0] - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double t = 2.0 * x[i] * x[i] - x[i - 1];
    s += static_cast<double>(i + 1) * t * t;
  }
  return s;
}

double drop_wave(const Vec& x) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
}

double egg_holder(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += -x[i] * std::sin(std::sqrt(std::abs(x[i] - x[i + 1] - 47.0))) -
         (x[i + 1] + 47.0) *
             std::sin(std::sqrt(std::abs(0.5 * x[i] + x[i + 1] + 47.0)));
  }
  return s;
}

double exponential_fn(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return -std::exp(-0.5 * s);
}

double giunta(const Vec& x) {
  double s = 0.6;
  for (double v : x) {
    const double u = 1.0 - 16.0 / 15.0 * v;
    const double su = std::sin(u);
    s += su * su - 0.02 * std::sin(4.0 - 64.0 / 15.0 * v) - su;
  }
  return s;
}

double mishra1(const Vec& x) {
  double g = static_cast<double>(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) g -= x[i];
  return std::pow(1.0 + g, g);
}

double mishra2(const Vec& x) {
  double g = static_cast<double>(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) g -= 0.5 * (x[i] + x[i + 1]);
  return std::pow(1.0 + g, g);
}

double periodic(const Vec& x) {
  const double s1 = std::sin(x[0]), s2 = std::sin(x[1]);
  return 1.0 + s1 * s1 + s2 * s2 -
         0.1 * std::exp(-x[0] * x[0] - x[1] * x[1]);
}

double powell_sum(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
  }
  return s;
}

double qing(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] * x[i] - static_cast<double>(i + 1);
    s += t * t;
  }
  return s;
}

double rastrigin(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

double rosenbrock(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * std::abs(x[i + 1] - x[i] * x[i]) +
         (1.0 - x[i]) * (1.0 - x[i]);
  }
  return s;
}

double salomon(const Vec& x) {
  const double r = norm(x);
  return 1.0 - std::cos(2.0 * kPi * r) + 0.1 * r;
}

double schumer_steiglitz(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v * v * v;
  return s;
}

double sphere(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double step_fn(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += std::floor(std::abs(v));
  return s;
}

double step_int(const Vec& x) {
  double s = 25.0;
  for (double v : x) s += std::floor(v);
  return s;
}

double sum_squares(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += static_cast<double>(i + 1) * x[i] * x[i];
  }
  return s;
}

double trid(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += (v - 1.0) * (v - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i - 1];
  return s;
}

double vincent(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += std::sin(10.0 * std::log(v));
  return -s;
}

double w_wavy(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += 1.0 - std::cos(10.0 * v) * std::exp(-0.5 * v * v);
  return s / static_cast<double>(x.size());
}

struct Def {
  const char* name;
  double lo, hi;
  double (*fn)(const Vec&);
  double f_star;
  Vec x_star;
  bool continuous, differentiable, convex;
  bool any_dim;  // the formula generalizes beyond n = 2
  double lipschitz_lower;  // 0 = unset
};

const std::vector<Def>& defs() {
  static const std::vector<Def> table = {
      {"Ackley1", -35, 35, ackley1, 0.0, {0.0, 0.0}, true, true, false, true, 0},
      {"Alpine1", -10, 10, alpine1, 0.0, {0.0, 0.0}, true, false, false, true, 0},
      {"Brent", -10, 10, brent, 1.3839e-87, {-10.0, -10.0}, true, true, true, false, 85},
      {"Brown", -1, 4, brown, 0.0, {0.0, 0.0}, true, true, true, true, 0},
      {"ChungReynolds", -100, 100, chung_reynolds, 0.0, {0.0, 0.0}, true, true, true, true, 0},
      {"Csendes", -2, 2, csendes, 0.0, {0.0, 0.0}, true, false, false, true, 0},
      {"Deb1", -1, 1, deb1, -1.0, {-0.1, -0.1}, true, true, false, true, 0},
      {"Deb2", 0, 1, deb2, -1.0, {0.079699, 0.079699}, true, true, false, true, 0},
      {"DixonPrice", -10, 10, dixon_price, 0.0, {1.0, 0.7071067811865476}, true, true, true, true, 0},
      {"DropWave", -5.12, 5.12, drop_wave, -1.0, {0.0, 0.0}, true, true, false, false, 0},
      {"EggHolder", -512, 512, egg_holder, -959.6407, {512.0, 404.2319}, true, true, false, true, 0},
      {"Exponential", -1, 1, exponential_fn, -1.0, {0.0, 0.0}, true, true, true, true, 0.61},
      {"Giunta", -1, 1, giunta, 0.06447, {0.46732, 0.46732}, true, true, false, true, 0},
      {"Mishra1", 0, 1, mishra1, 2.0, {1.0, 1.0}, true, true, false, true, 0},
      {"Mishra2", 0, 1, mishra2, 2.0, {1.0, 1.0}, true, true, false, true, 0},
      {"Periodic", -10, 10, periodic, 0.9, {0.0, 0.0}, true, true, false, false, 0},
      {"PowellSum", -1, 1, powell_sum, 0.0, {0.0, 0.0}, true, true, true, true, 0},
      {"Qing", -500, 500, qing, 0.0, {1.0, 1.4142135623730951}, true, true, false, true, 0},
      {"Rastrigin", -5.12, 5.12, rastrigin, 0.0, {0.0, 0.0}, true, true, false, true, 0},
      {"Rosenbrock", -5, 10, rosenbrock, 0.0, {1.0, 1.0}, true, true, false, true, 0},
      {"Salomon", -100, 100, salomon, 0.0, {0.0, 0.0}, true, true, false, true, 0},
      {"SchumerSteiglitz", -100, 100, schumer_steiglitz, 0.0, {0.0, 0.0}, true, true, true, true, 0},
      {"Sphere", -5.12, 5.12, sphere, 0.0, {0.0, 0.0}, true, true, true, true, 14.5},
      {"Step", -100, 100, step_fn, 0.0, {0.0, 0.0}, false, false, false, true, 0},
      {"StepInt", -5.12, 5.12, step_int, 13.0, {-5.12, -5.12}, false, false, false, true, 0},
      {"SumSquares", -10, 10, sum_squares, 0.0, {0.0, 0.0}, true, true, true, true, 45},
      {"Trid", -8, 8, trid, -2.0, {2.0, 2.0}, true, true, false, true, 0},
      {"Vincent", 0.25, 10, vincent, -2.0, {7.70628098, 7.70628098}, true, true, false, true, 0},
      {"WWavy", -kPi, kPi, w_wavy, 0.0, {0.0, 0.0}, true, true, false, true, 0},
  };
  return table;
}

const Def* find_def(const std::string& name) {
  for (const Def& d : defs()) {
    if (name == d.name) return &d;
  }
  return nullptr;
}

BenchmarkEntry make_entry(const Def& d) {
  BenchmarkEntry e;
  e.problem.name = d.name;
  e.problem.objective = d.fn;
  e.problem.domain = BoxDomain::cube(d.lo, d.hi, 2);
  e.problem.f_star = d.f_star;
  e.problem.x_star = {d.x_star};
  if (d.lipschitz_lower > 0) e.problem.lipschitz_lower = d.lipschitz_lower;
  e.continuous = d.continuous;
  e.differentiable = d.differentiable;
  e.convex = d.convex;
  if (d.convex) e.problem.tags.insert("convex");
  if (!d.continuous) e.problem.tags.insert("discontinuous");
  if (!d.differentiable) e.problem.tags.insert("nondifferentiable");
  return e;
}

}  // namespace

const std::vector<BenchmarkEntry>& registry() {
  static const std::vector<BenchmarkEntry> entries = [] {
    std::vector<BenchmarkEntry> out;
    out.reserve(defs().size());
    for (const Def& d : defs()) out.push_back(make_entry(d));
    return out;
  }();
  return entries;
}

bool has(const std::string& name) { return find_def(name) != nullptr; }

const BenchmarkEntry& find(const std::string& name) {
  const auto& entries = registry();
  for (const BenchmarkEntry& e : entries) {
    if (e.problem.name == name) return e;
  }
  throw SpecError("unknown problem name: " + name);
}

double evaluate(const std::string& name, const Vec& x) {
  const BenchmarkEntry& e = find(name);
  if (x.size() != e.problem.dim()) {
    throw SpecError(name + ": point dimension mismatch");
  }
  if (!e.problem.domain.contains(x)) {
    throw SpecError(name + ": point " + format_vec(x) + " outside the box");
  }
  return e.problem.objective(x);
}

Problem make_problem(const std::string& name, std::size_t dim) {
  const Def* d = find_def(name);
  if (!d) throw SpecError("unknown problem name: " + name);
  if (dim == 0) throw SpecError(name + ": dimension must be positive");
  if (!d->any_dim && dim != 2) {
    throw SpecError(name + ": defined for two dimensions only");
  }
  if (dim == 2) return find(name).problem;
  Problem p;
  p.name = d->name;
  p.objective = d->fn;
  p.domain = BoxDomain::cube(d->lo, d->hi, dim);
  return p;
}

const std::vector<std::string>& concave_names() {
  static const std::vector<std::string> names = {
      "Brent",     "Brown",            "ChungReynolds", "DixonPrice",
      "Exponential", "PowellSum",      "SchumerSteiglitz", "Sphere",
      "SumSquares",
  };
  return names;
}

Problem concave_variant(const std::string& name) {
  const auto& names = concave_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw SpecError(name + ": no concave variant (not in the convex set)");
  }
  const Def* d = find_def(name);
  auto base = d->fn;
  Problem p;
  p.name = d->name;
  p.objective = [base](const Vec& x) { return -base(x); };
  p.domain = BoxDomain::cube(d->lo, d->hi, 2);
  p.tags.insert("concave-variant");

  // The negated convex objective attains its box minimum at a vertex.
  double best = 0.0;
  std::vector<Vec> argmins;
  for (unsigned mask = 0; mask < 4u; ++mask) {
    Vec c = p.domain.corner(mask);
    double v = p.objective(c);
    if (argmins.empty() || v < best) {
      best = v;
      argmins.clear();
      argmins.push_back(std::move(c));
    } else if (v == best) {
      argmins.push_back(std::move(c));
    }
  }
  p.f_star = best;
  p.x_star = std::move(argmins);
  return p;
}

}  // namespace radls::problems
