#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace radls {

using Vec = std::vector<double>;

// Caller broke a precondition: bad dimensions, malformed parameters,
// unknown names. Maps to CLI exit code 2.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An objective misbehaved at runtime (non-finite value at a feasible
// point, I/O failure while writing results). Maps to CLI exit code 1.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool all_finite(const Vec& v);
double norm(const Vec& v);
double dot(const Vec& a, const Vec& b);

// Euclidean distance; throws SpecError on dimension mismatch.
double distance(const Vec& a, const Vec& b);

// Signed unit basis vector of the given dimension.
Vec axis_direction(std::size_t dim, std::size_t index, double sign);

std::string format_vec(const Vec& v);

struct BoxDomain {
  Vec lower;
  Vec upper;

  BoxDomain() = default;
  BoxDomain(Vec lo, Vec hi);
  static BoxDomain cube(double lo, double hi, std::size_t dim);

  std::size_t dim() const { return lower.size(); }
  bool contains(const Vec& x) const;
  Vec midpoint() const;
  // Vertex of the box selected bitwise: bit i set picks upper[i].
  Vec corner(unsigned mask) const;
};

// Coordinate-wise projection onto the box. Throws SpecError on dimension
// mismatch or non-finite input (a non-finite coordinate has no nearest
// feasible value).
Vec clamp_to_box(const Vec& x, const BoxDomain& box);

struct Problem {
  std::string name;
  std::function<double(const Vec&)> objective;
  BoxDomain domain;
  std::optional<double> f_star;
  std::vector<Vec> x_star;                 // known minimizers, may be empty
  std::optional<double> lipschitz_lower;   // lower-Lipschitz constant, test bound only
  std::set<std::string> tags;

  std::size_t dim() const { return domain.dim(); }
};

// Grid used by the difference-quotient line probe: steps t0 + k*beta,
// shrink factor alpha, floor under t0, and a hard cap on probe count.
struct GridParams {
  double t0 = 0.1;
  double beta = 0.1;
  double alpha = 0.1;
  double t_floor = 1e-6;
  long max_steps = 10300;

  // User-facing invariants. Optimizers shrink t0/beta internally below
  // t_floor; those transient grids are not re-validated.
  void validate() const;
  void shrink() {
    t0 *= alpha;
    beta *= alpha;
  }
};

struct StopConfig {
  double epsilon = 1e-4;
  long iteration_limit = 1000;
  int count_bar = 3;

  void validate() const;
};

}  // namespace radls
