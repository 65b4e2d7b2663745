#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radls::report {

// Relative optimality gap (f - f_star) / (1 + |f_star|). May be negative
// when f < f_star; callers warn rather than clamp. Throws SpecError on
// non-finite input.
double gap(double f, double f_star);

struct ResultRow {
  std::string problem;
  std::string algorithm;  // CC, RCC, PSO or RPSO
  std::optional<std::int64_t> seed;
  std::optional<std::int64_t> particles;
  std::int64_t iteration_limit = 0;
  double best_f = 0.0;
  std::optional<double> f_star;
  std::optional<double> gap;  // present iff f_star is
  std::int64_t evaluations = 0;
  double time_ms = 0.0;

  bool operator==(const ResultRow&) const = default;
};

struct AggregateCell {
  double mean = 0.0;
  double std_dev = 0.0;  // unbiased (n-1); 0 when n == 1
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::int64_t n = 0;
};

// Statistics of a nonempty sample. Throws SpecError when empty.
AggregateCell aggregate_values(const std::vector<double>& values);

enum class GroupField { Problem, Algorithm, Seed, Particles, IterationLimit };
enum class Metric { BestF, Gap, Evaluations, TimeMs };

// Groups rows by the requested fields (key parts joined with '|') and
// aggregates the chosen metric per group. Rows lacking the metric (no gap)
// are rejected. Throws SpecError on empty input.
std::map<std::string, AggregateCell> aggregate(
    const std::vector<ResultRow>& rows, const std::vector<GroupField>& key,
    Metric metric);

struct WinCounts {
  std::int64_t wins_a = 0;
  std::int64_t wins_b = 0;
  std::int64_t ties = 0;
};

// Pairs rows of the two algorithms on (problem, seed, particles,
// iteration_limit) and counts which side had the strictly smaller best_f
// beyond the tolerance; pairs within tolerance count as ties. Throws
// SpecError listing orphan configurations present on one side only.
WinCounts win_counts(const std::vector<ResultRow>& rows,
                     const std::string& algorithm_a,
                     const std::string& algorithm_b, double tolerance = 1e-9);

inline constexpr const char* kCsvHeader =
    "problem,algorithm,seed,particles,iteration_limit,best_f,f_star,gap,"
    "evaluations,time_ms";

enum class Format { Csv, Json };

// Renders a double with 17 significant digits (round-trippable).
std::string format_real(double v);

std::string render(const std::vector<ResultRow>& rows, Format format);

// Writes rows to path. Throws EvalError naming the path on I/O failure.
void emit(const std::vector<ResultRow>& rows, Format format,
          const std::string& path);

// Inverse of emit; validates the CSV header / JSON field names.
std::vector<ResultRow> parse_rows(const std::string& path);
std::vector<ResultRow> parse_rows_text(const std::string& text, Format format);

}  // namespace radls::report
