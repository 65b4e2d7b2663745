#include "radls/optimizers.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "radls/reporting.hpp"

namespace radls {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Copy of the problem whose objective counts calls and rejects non-finite
// values; every optimizer routes all evaluations through it.
Problem counted_view(const Problem& problem, std::int64_t* counter) {
  Problem p = problem;
  p.objective = [f = problem.objective, name = problem.name,
                 counter](const Vec& x) {
    ++*counter;
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw EvalError(name + ": objective returned non-finite value at " +
                      format_vec(x));
    }
    return v;
  };
  return p;
}

void check_unit_direction(const Vec& d, std::size_t dim) {
  if (d.size() != dim) throw SpecError("direction dimension mismatch");
  if (!all_finite(d)) {
    throw SpecError("direction has non-finite entries " + format_vec(d));
  }
  if (std::abs(norm(d) - 1.0) > 1e-9) {
    throw SpecError("direction is not unit length " + format_vec(d));
  }
}

Vec resolve_start(const Problem& p, const std::optional<Vec>& start) {
  Vec x = start ? *start : p.domain.midpoint();
  if (x.size() != p.dim()) throw SpecError(p.name + ": start dimension mismatch");
  if (!p.domain.contains(x)) {
    throw SpecError(p.name + ": start " + format_vec(x) + " outside the box");
  }
  return x;
}

void finish(RunResult& r, const Problem& counted, const Problem& original,
            std::int64_t* evals, Clock::time_point t_start) {
  r.best_f = counted.objective(r.best_x);
  if (original.f_star) r.gap = report::gap(r.best_f, *original.f_star);
  r.evaluations = *evals;
  r.wall_time = seconds_since(t_start);
}

bool is_zero(const Vec& v) {
  for (double x : v) {
    if (x != 0.0) return false;
  }
  return true;
}

std::vector<Vec> signed_axes(std::size_t n) {
  std::vector<Vec> dirs;
  dirs.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(axis_direction(n, i, +1.0));
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(axis_direction(n, i, -1.0));
  return dirs;
}

}  // namespace

void SwarmConfig::validate() const {
  if (particles < 1) throw SpecError("swarm: particles must be at least 1");
  if (!(std::isfinite(w) && std::isfinite(c1) && std::isfinite(c2))) {
    throw SpecError("swarm: non-finite coefficients");
  }
  if (w < 0 || c1 < 0 || c2 < 0) {
    throw SpecError("swarm: coefficients must be nonnegative");
  }
}

std::optional<std::pair<Vec, RadialEstimate>> descent_direction_search(
    const Problem& problem, const Vec& x, const std::vector<Vec>& directions,
    const GridParams& grid) {
  for (const Vec& d : directions) {
    check_unit_direction(d, x.size());
    RadialEstimate est = radial_epiderivative(problem, x, d, grid);
    if (est.value < 0) return std::make_pair(d, est);
  }
  return std::nullopt;
}

RunResult radial_descent_minimize(const Problem& problem,
                                  const DirectionGenerator& directions,
                                  const GridParams& grid,
                                  const StopConfig& stop,
                                  std::optional<Vec> start, bool record_trace) {
  grid.validate();
  stop.validate();
  if (!directions) throw SpecError("radial_descent: no direction generator");

  std::int64_t evals = 0;
  Problem p = counted_view(problem, &evals);
  Vec x = resolve_start(p, start);
  const auto t_start = Clock::now();

  RunResult r;
  double fx = p.objective(x);
  r.best_x = x;
  double best_f = fx;

  long k = 0;
  while (k < stop.iteration_limit) {
    auto found = descent_direction_search(p, x, directions(x), grid);
    double step = 0.0;
    if (found) {
      step = distance(found->second.endpoint, x);
      x = found->second.endpoint;
      fx = p.objective(x);
      if (fx < best_f) {
        best_f = fx;
        r.best_x = x;
      }
    }
    ++k;
    if (record_trace) r.trace.push_back({k, best_f, step});
    // No descending direction left; the move distance is 0 < epsilon.
    if (!found) break;
  }

  r.iterations = k;
  finish(r, p, problem, &evals, t_start);
  return r;
}

RunResult rcc_minimize(const Problem& problem, const GridParams& grid,
                       const StopConfig& stop, std::optional<Vec> start,
                       bool record_trace, bool reset_count_on_move) {
  grid.validate();
  stop.validate();

  std::int64_t evals = 0;
  Problem p = counted_view(problem, &evals);
  Vec x = resolve_start(p, start);
  const auto t_start = Clock::now();
  const auto dirs = signed_axes(p.dim());

  RunResult r;
  GridParams g = grid;
  double fx = p.objective(x);
  r.best_x = x;
  double best_f = fx;
  int count = 0;
  long k = 0;

  while (k < stop.iteration_limit) {
    Vec x_next = x;
    double f_next = fx;
    for (const Vec& d : dirs) {
      RadialEstimate est = radial_epiderivative(p, x, d, g);
      if (est.value >= 0) continue;
      const double fy = p.objective(est.endpoint);
      if (fy < f_next) {
        f_next = fy;
        x_next = est.endpoint;
      }
    }
    const double step = distance(x_next, x);
    x = std::move(x_next);
    fx = f_next;
    if (fx < best_f) {
      best_f = fx;
      r.best_x = x;
    }
    ++k;
    if (record_trace) r.trace.push_back({k, best_f, step});
    if (step < stop.epsilon) {
      g.shrink();
      ++count;
    } else if (reset_count_on_move) {
      count = 0;
    }
    if (count >= stop.count_bar) break;
  }

  r.iterations = k;
  finish(r, p, problem, &evals, t_start);
  return r;
}

RunResult cc_minimize(const Problem& problem, const StopConfig& stop,
                      const GridParams& line_grid, std::optional<Vec> start,
                      bool record_trace) {
  line_grid.validate();
  stop.validate();

  std::int64_t evals = 0;
  Problem p = counted_view(problem, &evals);
  Vec x = resolve_start(p, start);
  const auto t_start = Clock::now();
  const auto dirs = signed_axes(p.dim());

  RunResult r;
  GridParams g = line_grid;
  double fx = p.objective(x);
  r.best_x = x;
  int count = 0;
  long k = 0;

  while (k < stop.iteration_limit) {
    const Vec x_begin = x;
    for (const Vec& d : dirs) {
      // Plain value-minimizing search over the grid t0 + s*beta.
      double line_f = fx;
      double line_t = 0.0;
      Vec line_p;
      for (long s = 0; s < g.max_steps; ++s) {
        const double t = g.t0 + static_cast<double>(s) * g.beta;
        Vec probe = ray_point(x, t, d);
        if (!p.domain.contains(probe)) break;
        const double fy = p.objective(probe);
        if (fy < line_f) {
          line_f = fy;
          line_t = t;
          line_p = std::move(probe);
        }
      }
      if (line_t > 0.0) {
        x = std::move(line_p);
        fx = line_f;
      }
    }
    r.best_x = x;
    const double step = distance(x, x_begin);
    ++k;
    if (record_trace) r.trace.push_back({k, fx, step});
    if (step < stop.epsilon) {
      g.shrink();
      ++count;
    }
    if (count >= stop.count_bar) break;
  }

  r.iterations = k;
  finish(r, p, problem, &evals, t_start);
  return r;
}

Vec pso_velocity(const SwarmState& state, std::size_t i,
                 const SwarmConfig& cfg, double r1, double r2) {
  if (i >= state.positions.size()) {
    throw SpecError("pso_velocity: particle index out of range");
  }
  const Vec& x = state.positions[i];
  const Vec& v = state.velocities[i];
  const Vec& pb = state.pbest[i].first;
  const Vec& gb = state.gbest.first;
  Vec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = cfg.w * v[j] + cfg.c1 * r1 * (pb[j] - x[j]) +
             cfg.c2 * r2 * (gb[j] - x[j]);
  }
  return out;
}

Vec pso_velocity(const SwarmState& state, std::size_t i,
                 const SwarmConfig& cfg, RngStream& rng) {
  if (!cfg.per_dimension_random) {
    const double r1 = rng.uniform();
    const double r2 = rng.uniform();
    return pso_velocity(state, i, cfg, r1, r2);
  }
  if (i >= state.positions.size()) {
    throw SpecError("pso_velocity: particle index out of range");
  }
  const Vec& x = state.positions[i];
  const Vec& v = state.velocities[i];
  const Vec& pb = state.pbest[i].first;
  const Vec& gb = state.gbest.first;
  const std::size_t n = x.size();
  Vec r1(n), r2(n);
  for (std::size_t j = 0; j < n; ++j) r1[j] = rng.uniform();
  for (std::size_t j = 0; j < n; ++j) r2[j] = rng.uniform();
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = cfg.w * v[j] + cfg.c1 * r1[j] * (pb[j] - x[j]) +
             cfg.c2 * r2[j] * (gb[j] - x[j]);
  }
  return out;
}

namespace {

// Shared swarm setup: positions uniform in the box (particle-major,
// coordinate-minor draw order), velocities zero, pbest at the initial
// positions, gbest the best of them.
SwarmState init_swarm(const Problem& p, const SwarmConfig& cfg,
                      RngStream& rng) {
  const std::size_t n = p.dim();
  const auto P = static_cast<std::size_t>(cfg.particles);
  SwarmState s;
  s.positions.resize(P, Vec(n));
  s.velocities.assign(P, Vec(n, 0.0));
  s.pbest.resize(P);
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.positions[i][j] = rng.uniform(p.domain.lower[j], p.domain.upper[j]);
    }
  }
  for (std::size_t i = 0; i < P; ++i) {
    s.pbest[i] = {s.positions[i], p.objective(s.positions[i])};
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < P; ++i) {
    if (s.pbest[i].second < s.pbest[arg].second) arg = i;
  }
  s.gbest = s.pbest[arg];
  return s;
}

struct RayScan {
  bool descent = false;  // smallest difference quotient over the grid < 0
  Vec endpoint;          // quotient-argmin probe; set only when descent
  double best_f = 0.0;   // smallest objective value seen on the grid
  Vec best;              // the probe attaining best_f; set only when descent
};

// Walks the same feasible probe grid as radial_epiderivative (t0 + k*beta,
// stopping at the first point outside the box or after max_steps), keeping
// both the quotient minimizer (the estimate endpoint) and the probe with
// the smallest objective value. When the quotient is negative the endpoint
// is a strict improvement on f(x), and best_f <= f(endpoint) < f(x).
RayScan scan_ray(const Problem& p, const Vec& x, const Vec& h,
                 const GridParams& g) {
  RayScan out;
  const std::size_t n = x.size();
  const Vec& lo = p.domain.lower;
  const Vec& hi = p.domain.upper;
  const double fx = p.objective(x);
  Vec probe(n);
  bool have = false;
  double min_q = 0.0;
  double min_f = fx;
  for (long k = 0; k < g.max_steps; ++k) {
    const double t = g.t0 + static_cast<double>(k) * g.beta;
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      const double c = x[j] + t * h[j];
      probe[j] = c;
      inside = inside && c >= lo[j] && c <= hi[j];
    }
    if (!inside) break;
    const double fy = p.objective(probe);
    const double q = (fy - fx) / t;
    if (!have || q < min_q) {
      have = true;
      min_q = q;
      out.endpoint = probe;
    }
    if (fy < min_f) {
      min_f = fy;
      out.best = probe;
    }
  }
  out.descent = have && min_q < 0.0;
  out.best_f = min_f;
  return out;
}

}  // namespace

RunResult pso_minimize(const Problem& problem, const SwarmConfig& cfg,
                       const StopConfig& stop, std::uint64_t seed,
                       bool record_trace) {
  cfg.validate();
  stop.validate();

  std::int64_t evals = 0;
  Problem p = counted_view(problem, &evals);
  const auto t_start = Clock::now();
  RngStream rng(seed);
  SwarmState s = init_swarm(p, cfg, rng);
  const auto P = s.positions.size();

  RunResult r;
  r.seed = seed;
  int count = 0;
  long k = 0;

  // Stops at whichever comes first: the iteration budget, or count_bar
  // consecutive iterations without a gbest improvement.
  while (k < stop.iteration_limit && count < stop.count_bar) {
    for (std::size_t i = 0; i < P; ++i) {
      Vec v = pso_velocity(s, i, cfg, rng);
      Vec xn(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        xn[j] = s.positions[i][j] + v[j];
      }
      s.velocities[i] = std::move(v);
      s.positions[i] = clamp_to_box(xn, p.domain);
      const double f = p.objective(s.positions[i]);
      if (f < s.pbest[i].second) s.pbest[i] = {s.positions[i], f};
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < P; ++i) {
      if (s.pbest[i].second < s.pbest[arg].second) arg = i;
    }
    double step = 0.0;
    if (s.pbest[arg].second < s.gbest.second) {
      step = distance(s.pbest[arg].first, s.gbest.first);
      s.gbest = s.pbest[arg];
      count = 0;
    } else {
      ++count;
    }
    s.stagnation_count = count;
    ++k;
    if (record_trace) r.trace.push_back({k, s.gbest.second, step});
  }

  r.best_x = s.gbest.first;
  r.iterations = k;
  finish(r, p, problem, &evals, t_start);
  return r;
}

RunResult rpso_minimize(const Problem& problem, const SwarmConfig& cfg,
                        const GridParams& grid, const StopConfig& stop,
                        std::uint64_t seed, bool record_trace) {
  cfg.validate();
  grid.validate();
  stop.validate();

  std::int64_t evals = 0;
  Problem p = counted_view(problem, &evals);
  const auto t_start = Clock::now();
  RngStream rng(seed);
  SwarmState s = init_swarm(p, cfg, rng);
  const auto P = s.positions.size();
  const std::size_t n = p.dim();
  s.per_particle_grid.assign(P, grid);

  RunResult r;
  r.seed = seed;
  std::vector<char> pbest_changed(P, 1);  // no previous iteration yet
  bool gbest_changed = true;
  std::vector<double> iter_f(P);
  int count = 0;
  long k = 0;

  // Same stopping rule as pso_minimize: iteration budget or a
  // count_bar-long gbest stall, whichever comes first.
  while (k < stop.iteration_limit && count < stop.count_bar) {
    std::vector<char> pbest_changed_now(P, 0);
    for (std::size_t i = 0; i < P; ++i) {
      Vec v = pso_velocity(s, i, cfg, rng);
      GridParams& g = s.per_particle_grid[i];
      if (!gbest_changed && !pbest_changed[i]) {
        if (g.t0 > grid.t_floor) {
          g.shrink();
        } else {
          // Exhausted grid around a stale point: redraw the particle.
          for (std::size_t j = 0; j < n; ++j) {
            s.positions[i][j] =
                rng.uniform(p.domain.lower[j], p.domain.upper[j]);
          }
          v.assign(n, 0.0);
          g = grid;
        }
      } else if (!pbest_changed[i]) {
        if (g.t0 > grid.t_floor) g.shrink();
      }
      s.velocities[i] = v;
      if (!is_zero(v)) {
        // The raw velocity is the probe ray, so the grid's spatial stride
        // scales with |v|. A particle moves only when the ray is a descent
        // direction; it normally takes the estimate endpoint, but when the
        // scan happened to pass a point better than the swarm's best known
        // value it jumps there instead of discarding the record.
        RayScan scan = scan_ray(p, s.positions[i], v, g);
        if (scan.descent) {
          s.positions[i] = scan.best_f < s.gbest.second
                               ? std::move(scan.best)
                               : std::move(scan.endpoint);
        }
      }
      const double f = p.objective(s.positions[i]);
      iter_f[i] = f;
      if (f < s.pbest[i].second) {
        s.pbest[i] = {s.positions[i], f};
        pbest_changed_now[i] = 1;
      }
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < P; ++i) {
      if (iter_f[i] < iter_f[arg]) arg = i;
    }
    double step = 0.0;
    gbest_changed = iter_f[arg] < s.gbest.second;
    if (gbest_changed) {
      step = distance(s.positions[arg], s.gbest.first);
      s.gbest = {s.positions[arg], iter_f[arg]};
      count = 0;
    } else {
      ++count;
    }
    s.stagnation_count = count;
    pbest_changed = std::move(pbest_changed_now);
    ++k;
    if (record_trace) r.trace.push_back({k, s.gbest.second, step});
  }

  r.best_x = s.gbest.first;
  r.iterations = k;
  finish(r, p, problem, &evals, t_start);
  return r;
}

}  // namespace radls
