#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radls/core.hpp"
#include "radls/problems.hpp"

namespace radls::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string detail;  // first counterexample when failed
};

struct SuiteOptions {
  std::uint64_t seed = 20240901;
  long oracle_triples = 200;
  long descent_calls = 10000;
  long linear_objectives = 100;
  long concavity_samples = 500;
  long lower_bound_samples = 100000;
};

// |f(x_star) - f_star| <= 1e-6 * (1 + |f_star|) for every entry.
SuiteResult registry_consistency(const std::vector<problems::BenchmarkEntry>& entries);

// radial_epiderivative against a direct enumeration of the identical
// probe set: value, t_star and probe count must match exactly.
SuiteResult oracle_equivalence(const SuiteOptions& opts);

// value < 0 implies f(endpoint) < f(x) with endpoint inside the box;
// value >= 0 implies endpoint == x.
SuiteResult descent_soundness(const SuiteOptions& opts);

// On f(x) = c.x with lattice coefficients the estimate equals c.h to
// within 8 ulp for every grid.
SuiteResult linear_exactness(const SuiteOptions& opts);

// Dense-grid estimates of concave quadratics satisfy the concavity
// inequality in the direction argument up to a curvature-scaled
// tolerance.
SuiteResult concavity_inequality(const SuiteOptions& opts);

// No sampled feasible point evaluates below f_star - 1e-9 * (1 + |f_star|).
SuiteResult optimum_lower_bound(const SuiteOptions& opts);

// evaluate() rejects points outside the box for every entry.
SuiteResult box_respect();

// Monotone traces, stationarity at a known optimum, and exact evaluation
// accounting for the optimizers on a few registry problems.
SuiteResult optimizer_invariants(const SuiteOptions& opts);

std::vector<SuiteResult> run_all(const SuiteOptions& opts);

// Units-in-last-place distance between two doubles of the same sign.
std::uint64_t ulp_distance(double a, double b);

}  // namespace radls::verify
