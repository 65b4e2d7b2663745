#pragma once

#include "radls/core.hpp"

namespace radls {

// Outcome of one grid probe along a ray.
struct RadialEstimate {
  double value = 0.0;   // smallest difference quotient found on the grid
  Vec endpoint;         // probe attaining it when value < 0, else the base point
  double t_star = 0.0;  // step attaining value; 0 when value >= 0
  long probes = 0;      // grid points evaluated
};

// x + t*h computed coordinate-wise. Shared by the estimator, the oracle
// and the brute-force checks so all of them visit bit-identical probe
// points.
Vec ray_point(const Vec& x, double t, const Vec& h);

// Approximates the radial epiderivative of the objective at x in
// direction h: walks t = t0, t0+beta, t0+2*beta, ... while x + t*h stays
// inside the box (stopping at the first infeasible step, or after
// max_steps probes) and returns the minimum difference quotient
// (f(x+t*h) - f(x)) / t together with the probe attaining it. Ties go to
// the smallest t. An empty grid (first probe already infeasible) yields
// value 0 at x.
RadialEstimate radial_epiderivative(const Problem& problem, const Vec& x,
                                    const Vec& h, const GridParams& grid);

// Reference quotient minimizer on a dense even grid over (0, t_max]:
// t_j = t_max * j / resolution. Infeasible probes are skipped rather than
// truncating the scan; returns 0 if no probe is feasible.
double radial_epiderivative_oracle(const Problem& problem, const Vec& x,
                                   const Vec& h, double t_max,
                                   long resolution);

}  // namespace radls
