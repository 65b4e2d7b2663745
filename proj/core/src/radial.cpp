#include "radls/radial.hpp"

#include <cmath>
#include <sstream>

namespace radls {

namespace {

double eval_checked(const Problem& problem, const Vec& p) {
  double f = problem.objective(p);
  if (!std::isfinite(f)) {
    std::ostringstream msg;
    msg << problem.name << ": objective returned " << f << " at " << format_vec(p);
    throw EvalError(msg.str());
  }
  return f;
}

void check_ray_inputs(const Problem& problem, const Vec& x, const Vec& h) {
  if (x.size() != problem.dim()) {
    throw SpecError(problem.name + ": base point dimension mismatch");
  }
  if (h.size() != x.size()) {
    throw SpecError(problem.name + ": direction dimension mismatch");
  }
  if (!all_finite(x)) {
    throw SpecError(problem.name + ": non-finite base point " + format_vec(x));
  }
  if (!all_finite(h)) {
    throw SpecError(problem.name + ": non-finite direction " + format_vec(h));
  }
  if (!problem.domain.contains(x)) {
    throw SpecError(problem.name + ": base point " + format_vec(x) + " outside the box");
  }
  bool zero = true;
  for (double hi : h) {
    if (hi != 0.0) {
      zero = false;
      break;
    }
  }
  if (zero) throw SpecError(problem.name + ": direction is the zero vector");
}

}  // namespace

Vec ray_point(const Vec& x, double t, const Vec& h) {
  Vec p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i] + t * h[i];
  return p;
}

RadialEstimate radial_epiderivative(const Problem& problem, const Vec& x,
                                    const Vec& h, const GridParams& grid) {
  check_ray_inputs(problem, x, h);
  if (!(grid.t0 > 0) || !(grid.beta > 0) || grid.max_steps < 1) {
    throw SpecError("radial_epiderivative: grid requires t0 > 0, beta > 0, max_steps >= 1");
  }

  const double fx = eval_checked(problem, x);

  RadialEstimate est;
  est.endpoint = x;
  bool have_min = false;
  double min_q = 0.0;
  double min_t = 0.0;

  // Hot loop: the probe vector is reused across steps; the coordinate
  // expression must stay identical to ray_point so the winning endpoint
  // can be reconstructed bit-for-bit below.
  const std::size_t n = x.size();
  const Vec& lo = problem.domain.lower;
  const Vec& hi = problem.domain.upper;
  Vec p(n);
  for (long k = 0; k < grid.max_steps; ++k) {
    const double t = grid.t0 + static_cast<double>(k) * grid.beta;
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      const double c = x[j] + t * h[j];
      p[j] = c;
      inside = inside && c >= lo[j] && c <= hi[j];
    }
    if (!inside) break;
    const double q = (eval_checked(problem, p) - fx) / t;
    ++est.probes;
    if (!have_min || q < min_q) {
      have_min = true;
      min_q = q;
      min_t = t;
    }
  }

  if (have_min) {
    est.value = min_q;
    if (min_q < 0.0) {
      est.t_star = min_t;
      est.endpoint = ray_point(x, min_t, h);
    }
  }
  return est;
}

double radial_epiderivative_oracle(const Problem& problem, const Vec& x,
                                   const Vec& h, double t_max,
                                   long resolution) {
  check_ray_inputs(problem, x, h);
  if (!(std::isfinite(t_max) && t_max > 0)) {
    throw SpecError("radial_epiderivative_oracle: t_max must be positive");
  }
  if (resolution < 1) {
    throw SpecError("radial_epiderivative_oracle: resolution must be at least 1");
  }

  const double fx = eval_checked(problem, x);
  bool any = false;
  double min_q = 0.0;
  for (long j = 1; j <= resolution; ++j) {
    const double t = t_max * (static_cast<double>(j) / static_cast<double>(resolution));
    Vec p = ray_point(x, t, h);
    if (!problem.domain.contains(p)) continue;
    const double q = (eval_checked(problem, p) - fx) / t;
    if (!any || q < min_q) {
      any = true;
      min_q = q;
    }
  }
  return any ? min_q : 0.0;
}

}  // namespace radls
