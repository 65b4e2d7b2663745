#pragma once

#include <cstdint>
#include <utility>

#include "radls/core.hpp"
#include "radls/radial.hpp"
#include "radls/rng.hpp"

namespace radls {

struct SwarmConfig {
  int particles = 30;
  double w = 0.729;
  double c1 = 1.49445;
  double c2 = 1.49445;
  // Scalar r1/r2 per particle per iteration by default; per-coordinate
  // draws when set.
  bool per_dimension_random = false;

  void validate() const;
};

struct SwarmState {
  std::vector<Vec> positions;
  std::vector<Vec> velocities;
  std::vector<std::pair<Vec, double>> pbest;  // position, value
  std::pair<Vec, double> gbest;
  std::vector<GridParams> per_particle_grid;
  int stagnation_count = 0;  // consecutive iterations without gbest improvement
};

struct TracePoint {
  long iteration = 0;
  double best_f = 0.0;
  double step_distance = 0.0;  // distance moved at this iteration
};

struct RunResult {
  Vec best_x;
  double best_f = 0.0;
  std::optional<double> gap;  // set when the problem knows f_star
  long iterations = 0;
  std::int64_t evaluations = 0;  // exact objective call count
  double wall_time = 0.0;        // seconds
  std::optional<std::uint64_t> seed;
  std::vector<TracePoint> trace;  // recorded only on request
};

using DirectionGenerator = std::function<std::vector<Vec>(const Vec&)>;

// Scans the ordered unit directions and returns the first one whose grid
// estimate is negative, together with that estimate; nullopt when no
// direction descends. Throws SpecError on non-unit or non-finite
// directions.
std::optional<std::pair<Vec, RadialEstimate>> descent_direction_search(
    const Problem& problem, const Vec& x, const std::vector<Vec>& directions,
    const GridParams& grid);

// Generic line search: at each iterate asks the generator for candidate
// unit directions, moves to the endpoint of the first descending one, and
// stops when no direction descends (or at iteration_limit).
RunResult radial_descent_minimize(const Problem& problem,
                                  const DirectionGenerator& directions,
                                  const GridParams& grid,
                                  const StopConfig& stop,
                                  std::optional<Vec> start = std::nullopt,
                                  bool record_trace = false);

// Velocity update v <- w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x) with
// fresh uniform draws from rng (r1 then r2; coordinate-major in
// per-dimension mode).
Vec pso_velocity(const SwarmState& state, std::size_t i,
                 const SwarmConfig& cfg, RngStream& rng);
// Same update with fixed multipliers (deterministic, for tests).
Vec pso_velocity(const SwarmState& state, std::size_t i,
                 const SwarmConfig& cfg, double r1, double r2);

// Swarm search whose moves are grid line probes along the raw particle
// velocities; a particle moves only when its velocity is a descent
// direction (negative quotient estimate on the probe grid), and then
// jumps to the lowest probe found. Per particle: stagnation of its
// pbest shrinks its private grid by alpha; stagnation of both pbest and
// gbest with the grid already at t_floor redraws the particle position
// uniformly, resets its grid and zeroes its velocity (a zero velocity
// skips the probe). Stops at the iteration budget or once gbest has
// stalled for count_bar consecutive iterations, whichever comes first.
RunResult rpso_minimize(const Problem& problem, const SwarmConfig& cfg,
                        const GridParams& grid, const StopConfig& stop,
                        std::uint64_t seed, bool record_trace = false);

// Coordinate search: per iteration probes all 2n signed axis directions
// from the current point (+e1..+en then -e1..-en) and moves to the probe
// endpoint with the smallest objective value among the improving ones.
// When the iteration moves less than epsilon the shared grid shrinks by
// alpha and a cumulative stall counter increments; the run stops at
// count_bar stalls or iteration_limit. Start defaults to the box
// midpoint. reset_count_on_move switches the stall counter to
// consecutive-stall semantics.
RunResult rcc_minimize(const Problem& problem, const GridParams& grid,
                       const StopConfig& stop,
                       std::optional<Vec> start = std::nullopt,
                       bool record_trace = false,
                       bool reset_count_on_move = false);

// Plain cyclic coordinate baseline: walks the same signed-axis order, but
// along each direction simply moves to the grid point with the smallest
// objective value (no quotient test). Same shrink/stall stopping as
// rcc_minimize.
RunResult cc_minimize(const Problem& problem, const StopConfig& stop,
                      const GridParams& line_grid,
                      std::optional<Vec> start = std::nullopt,
                      bool record_trace = false);

// Plain particle swarm baseline: position update x <- clamp(x + v), same
// initialization and stopping rule as rpso_minimize.
RunResult pso_minimize(const Problem& problem, const SwarmConfig& cfg,
                       const StopConfig& stop, std::uint64_t seed,
                       bool record_trace = false);

}  // namespace radls
