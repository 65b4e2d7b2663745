#include "radls/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace radls {

bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw SpecError("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw SpecError("distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec axis_direction(std::size_t dim, std::size_t index, double sign) {
  if (index >= dim) throw SpecError("axis_direction: index out of range");
  Vec d(dim, 0.0);
  d[index] = sign < 0 ? -1.0 : 1.0;
  return d;
}

std::string format_vec(const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

BoxDomain::BoxDomain(Vec lo, Vec hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw SpecError("box: bound dimension mismatch");
  if (lower.empty()) throw SpecError("box: zero-dimensional bounds");
  if (!all_finite(lower) || !all_finite(upper)) throw SpecError("box: non-finite bounds");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw SpecError("box: lower bound exceeds upper bound in coordinate " +
                      std::to_string(i));
    }
  }
}

BoxDomain BoxDomain::cube(double lo, double hi, std::size_t dim) {
  return BoxDomain(Vec(dim, lo), Vec(dim, hi));
}

bool BoxDomain::contains(const Vec& x) const {
  if (x.size() != dim()) throw SpecError("box: point dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] && x[i] <= upper[i])) return false;
  }
  return true;
}

Vec BoxDomain::midpoint() const {
  Vec m(dim());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = 0.5 * (lower[i] + upper[i]);
  return m;
}

Vec BoxDomain::corner(unsigned mask) const {
  Vec c(dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (mask >> i) & 1u ? upper[i] : lower[i];
  }
  return c;
}

Vec clamp_to_box(const Vec& x, const BoxDomain& box) {
  if (x.size() != box.dim()) throw SpecError("clamp_to_box: dimension mismatch");
  if (!all_finite(x)) throw SpecError("clamp_to_box: non-finite input " + format_vec(x));
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = std::min(std::max(x[i], box.lower[i]), box.upper[i]);
  }
  return y;
}

void GridParams::validate() const {
  if (!(std::isfinite(t0) && t0 > 0)) throw SpecError("grid: t0 must be positive");
  if (!(std::isfinite(beta) && beta > 0)) throw SpecError("grid: beta must be positive");
  if (!(std::isfinite(alpha) && alpha > 0 && alpha < 1)) {
    throw SpecError("grid: alpha must lie in (0, 1)");
  }
  if (!(std::isfinite(t_floor) && t_floor > 0 && t_floor <= t0)) {
    throw SpecError("grid: t_floor must satisfy 0 < t_floor <= t0");
  }
  if (max_steps < 1) throw SpecError("grid: max_steps must be at least 1");
}

void StopConfig::validate() const {
  if (!(std::isfinite(epsilon) && epsilon > 0)) throw SpecError("stop: epsilon must be positive");
  if (iteration_limit < 1) throw SpecError("stop: iteration_limit must be at least 1");
  if (count_bar < 1) throw SpecError("stop: count_bar must be at least 1");
}

}  // namespace radls
