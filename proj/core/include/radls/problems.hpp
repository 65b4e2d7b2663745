#pragma once

#include "radls/core.hpp"

namespace radls::problems {

struct BenchmarkEntry {
  Problem problem;
  bool continuous = true;
  bool differentiable = true;
  bool convex = false;
};

// All 29 two-dimensional test problems, ordered by name. The name strings
// are the stable public identifiers used by the CLI and result files.
const std::vector<BenchmarkEntry>& registry();

bool has(const std::string& name);
const BenchmarkEntry& find(const std::string& name);

// Evaluates the named problem at x; throws SpecError for unknown names or
// points outside the box.
double evaluate(const std::string& name, const Vec& x);

// n-dimensional variant for the functions whose formula generalizes
// (property tests only). Throws SpecError for strictly two-dimensional
// functions when dim != 2.
Problem make_problem(const std::string& name, std::size_t dim);

// Names of the convex entries that have a negated counterpart.
const std::vector<std::string>& concave_names();

// Negated objective over the same box. f_star is the exact box minimum of
// the negated function, found by vertex enumeration; x_star holds the
// minimizing vertices. Throws SpecError for names outside concave_names().
Problem concave_variant(const std::string& name);

}  // namespace radls::problems
