#include "radls/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "radls/core.hpp"

namespace radls::report {

namespace {

using nlohmann::json;

std::string opt_int_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_real_str(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

json opt_int_json(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_real_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

double parse_real(const std::string& s, const char* what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw SpecError(std::string("bad ") + what + " value: '" + s + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw SpecError(std::string("bad ") + what + " value: '" + s + "'");
  }
  return v;
}

std::string field_value(const ResultRow& r, GroupField f) {
  switch (f) {
    case GroupField::Problem:
      return r.problem;
    case GroupField::Algorithm:
      return r.algorithm;
    case GroupField::Seed:
      return opt_int_str(r.seed);
    case GroupField::Particles:
      return opt_int_str(r.particles);
    case GroupField::IterationLimit:
      return std::to_string(r.iteration_limit);
  }
  return {};
}

double metric_value(const ResultRow& r, Metric m) {
  switch (m) {
    case Metric::BestF:
      return r.best_f;
    case Metric::Gap:
      if (!r.gap) {
        throw SpecError("row " + r.problem + "/" + r.algorithm + " has no gap");
      }
      return *r.gap;
    case Metric::Evaluations:
      return static_cast<double>(r.evaluations);
    case Metric::TimeMs:
      return r.time_ms;
  }
  return 0.0;
}

}  // namespace

double gap(double f, double f_star) {
  if (!std::isfinite(f) || !std::isfinite(f_star)) {
    throw SpecError("gap: non-finite input");
  }
  return (f - f_star) / (1.0 + std::abs(f_star));
}

AggregateCell aggregate_values(const std::vector<double>& values) {
  if (values.empty()) throw SpecError("aggregate: empty sample");
  AggregateCell c;
  c.n = static_cast<std::int64_t>(values.size());
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  c.min = sorted.front();
  c.max = sorted.back();
  const std::size_t n = sorted.size();
  c.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double sum = 0.0;
  for (double v : sorted) sum += v;
  c.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) {
      const double d = v - c.mean;
      ss += d * d;
    }
    c.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return c;
}

std::map<std::string, AggregateCell> aggregate(
    const std::vector<ResultRow>& rows, const std::vector<GroupField>& key,
    Metric metric) {
  if (rows.empty()) throw SpecError("aggregate: no rows");
  std::map<std::string, std::vector<double>> groups;
  for (const ResultRow& r : rows) {
    std::string k;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) k.push_back('|');
      k += field_value(r, key[i]);
    }
    groups[k].push_back(metric_value(r, metric));
  }
  std::map<std::string, AggregateCell> out;
  for (const auto& [k, vals] : groups) out.emplace(k, aggregate_values(vals));
  return out;
}

WinCounts win_counts(const std::vector<ResultRow>& rows,
                     const std::string& algorithm_a,
                     const std::string& algorithm_b, double tolerance) {
  if (tolerance < 0) throw SpecError("win_counts: negative tolerance");
  std::map<std::string, double> side_a, side_b;
  auto config_key = [](const ResultRow& r) {
    return r.problem + "|" + opt_int_str(r.seed) + "|" +
           opt_int_str(r.particles) + "|" + std::to_string(r.iteration_limit);
  };
  for (const ResultRow& r : rows) {
    std::map<std::string, double>* side = nullptr;
    if (r.algorithm == algorithm_a) side = &side_a;
    if (r.algorithm == algorithm_b) side = &side_b;
    if (!side) continue;
    auto [it, fresh] = side->emplace(config_key(r), r.best_f);
    if (!fresh) {
      throw SpecError("win_counts: duplicate configuration " + it->first +
                      " for " + r.algorithm);
    }
  }
  std::vector<std::string> orphans;
  for (const auto& [k, v] : side_a) {
    if (!side_b.count(k)) orphans.push_back(k + " (only " + algorithm_a + ")");
  }
  for (const auto& [k, v] : side_b) {
    if (!side_a.count(k)) orphans.push_back(k + " (only " + algorithm_b + ")");
  }
  if (!orphans.empty()) {
    std::string msg = "win_counts: unmatched configurations:";
    for (const auto& o : orphans) msg += " " + o;
    throw SpecError(msg);
  }
  WinCounts w;
  for (const auto& [k, fa] : side_a) {
    const double fb = side_b.at(k);
    if (std::abs(fa - fb) <= tolerance) {
      ++w.ties;
    } else if (fa < fb) {
      ++w.wins_a;
    } else {
      ++w.wins_b;
    }
  }
  return w;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render(const std::vector<ResultRow>& rows, Format format) {
  if (format == Format::Csv) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ResultRow& r : rows) {
      out << r.problem << ',' << r.algorithm << ',' << opt_int_str(r.seed)
          << ',' << opt_int_str(r.particles) << ',' << r.iteration_limit << ','
          << format_real(r.best_f) << ',' << opt_real_str(r.f_star) << ','
          << opt_real_str(r.gap) << ',' << r.evaluations << ','
          << format_real(r.time_ms) << '\n';
    }
    return out.str();
  }
  json arr = json::array();
  for (const ResultRow& r : rows) {
    arr.push_back({{"problem", r.problem},
                   {"algorithm", r.algorithm},
                   {"seed", opt_int_json(r.seed)},
                   {"particles", opt_int_json(r.particles)},
                   {"iteration_limit", r.iteration_limit},
                   {"best_f", r.best_f},
                   {"f_star", opt_real_json(r.f_star)},
                   {"gap", opt_real_json(r.gap)},
                   {"evaluations", r.evaluations},
                   {"time_ms", r.time_ms}});
  }
  return arr.dump(2) + "\n";
}

void emit(const std::vector<ResultRow>& rows, Format format,
          const std::string& path) {
  for (const ResultRow& r : rows) {
    if (r.gap && *r.gap < 0) {
      std::cerr << "warning: negative gap for " << r.problem << "/"
                << r.algorithm << " (best_f " << format_real(r.best_f)
                << " below f_star)\n";
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw EvalError("emit: cannot open " + path);
  out << render(rows, format);
  out.flush();
  if (!out) throw EvalError("emit: write failed for " + path);
}

std::vector<ResultRow> parse_rows_text(const std::string& text, Format format) {
  std::vector<ResultRow> rows;
  if (format == Format::Json) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw SpecError("parse_rows: expected a JSON array");
    for (const json& j : arr) {
      ResultRow r;
      r.problem = j.at("problem").get<std::string>();
      r.algorithm = j.at("algorithm").get<std::string>();
      if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::int64_t>();
      if (!j.at("particles").is_null()) {
        r.particles = j.at("particles").get<std::int64_t>();
      }
      r.iteration_limit = j.at("iteration_limit").get<std::int64_t>();
      r.best_f = j.at("best_f").get<double>();
      if (!j.at("f_star").is_null()) r.f_star = j.at("f_star").get<double>();
      if (!j.at("gap").is_null()) r.gap = j.at("gap").get<double>();
      r.evaluations = j.at("evaluations").get<std::int64_t>();
      r.time_ms = j.at("time_ms").get<double>();
      rows.push_back(std::move(r));
    }
    return rows;
  }
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw SpecError("parse_rows: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw SpecError("parse_rows: unexpected header '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw SpecError("parse_rows: expected 10 fields, got " +
                      std::to_string(f.size()) + " in '" + line + "'");
    }
    ResultRow r;
    r.problem = f[0];
    r.algorithm = f[1];
    if (!f[2].empty()) r.seed = parse_int(f[2], "seed");
    if (!f[3].empty()) r.particles = parse_int(f[3], "particles");
    r.iteration_limit = parse_int(f[4], "iteration_limit");
    r.best_f = parse_real(f[5], "best_f");
    if (!f[6].empty()) r.f_star = parse_real(f[6], "f_star");
    if (!f[7].empty()) r.gap = parse_real(f[7], "gap");
    r.evaluations = parse_int(f[8], "evaluations");
    r.time_ms = parse_real(f[9], "time_ms");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> parse_rows(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EvalError("parse_rows: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const Format format =
      (i < text.size() && text[i] == '[') ? Format::Json : Format::Csv;
  return parse_rows_text(text, format);
}

}  // namespace radls::report
