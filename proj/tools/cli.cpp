#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "radls/problems.hpp"
#include "radls/verify.hpp"

namespace radls::cli {

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string short_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end == s.c_str() || *end != '\0') {
    throw SpecError(what + ": not an integer: '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end == s.c_str() || *end != '\0') {
    throw SpecError(what + ": not a number: '" + s + "'");
  }
  return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw SpecError(what + ": not a boolean: '" + s + "'");
}

// ---------------------------------------------------------------- config

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::string toml_value(const std::string& raw, const std::string& key) {
  const std::string v = trim(raw);
  if (v.empty()) throw SpecError("config: empty value for '" + key + "'");
  if (v.front() == '[') {
    if (v.back() != ']') throw SpecError("config: unterminated array for '" + key + "'");
    std::string joined;
    for (const std::string& item : split_csv(v.substr(1, v.size() - 2))) {
      const std::string t = unquote(trim(item));
      if (t.empty()) continue;
      if (!joined.empty()) joined += ',';
      joined += t;
    }
    return joined;
  }
  return unquote(v);
}

std::map<std::string, std::string> parse_toml_subset(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') continue;  // section headers carry no data here
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw SpecError("config: line " + std::to_string(lineno) +
                      " is not 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw SpecError("config: line " + std::to_string(lineno) + " has no key");
    }
    out[key] = toml_value(line.substr(eq + 1), key);
  }
  return out;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw SpecError("config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw SpecError("config: '" + path + "' is not an object");
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : j.items()) {
      if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
          if (!joined.empty()) joined += ',';
          joined += json_scalar(item);
        }
        out[key] = joined;
      } else {
        out[key] = json_scalar(value);
      }
    }
    return out;
  }
  std::istringstream tin(text);
  return parse_toml_subset(tin);
}

// ------------------------------------------------------------- cmd_run

struct Cell {
  std::string problem;
  std::string algo;  // lowercase
  std::optional<std::uint64_t> seed;
  std::optional<int> particles;
};

bool deterministic(const std::string& algo) { return algo == "cc" || algo == "rcc"; }

void validate_spec(const RunSpec& spec) {
  if (spec.problems.empty()) throw SpecError("run: no problems selected");
  if (spec.algorithms.empty()) throw SpecError("run: no algorithms selected");
  static const std::set<std::string> known{"cc", "rcc", "pso", "rpso"};
  for (const std::string& a : spec.algorithms) {
    if (!known.count(a)) throw SpecError("run: unknown algorithm '" + a + "'");
  }
  bool stochastic = false;
  for (const std::string& a : spec.algorithms) stochastic = stochastic || !deterministic(a);
  if (stochastic) {
    if (spec.seeds.empty()) throw SpecError("run: no seeds for a stochastic algorithm");
    if (spec.particles.empty()) throw SpecError("run: no particle counts");
    for (int p : spec.particles) {
      if (p < 1) throw SpecError("run: particles must be >= 1");
    }
  }
  if (spec.jobs < 1) throw SpecError("run: jobs must be >= 1");
  spec.grid.validate();
  spec.stop.validate();
  SwarmConfig sw = spec.swarm;
  sw.particles = stochastic ? spec.particles.front() : 1;
  sw.validate();
}

RunResult execute(const Problem& p, const Cell& c, const RunSpec& spec) {
  if (c.algo == "cc") return cc_minimize(p, spec.stop, spec.grid, std::nullopt, spec.trace);
  if (c.algo == "rcc") return rcc_minimize(p, spec.grid, spec.stop, std::nullopt, spec.trace);
  SwarmConfig sw = spec.swarm;
  sw.particles = *c.particles;
  if (c.algo == "pso") return pso_minimize(p, sw, spec.stop, *c.seed, spec.trace);
  return rpso_minimize(p, sw, spec.grid, spec.stop, *c.seed, spec.trace);
}

std::string cell_label(const Cell& c) {
  std::string s = "problem=" + c.problem + " algorithm=" + upper(c.algo);
  if (c.seed) s += " seed=" + std::to_string(*c.seed);
  if (c.particles) s += " particles=" + std::to_string(*c.particles);
  return s;
}

void print_summary(const std::vector<report::ResultRow>& rows, std::ostream& out) {
  const std::vector<std::string> head = {"problem",     "algorithm", "seed",
                                         "particles",   "best_f",    "gap",
                                         "evaluations", "time_ms"};
  std::vector<std::vector<std::string>> body;
  body.reserve(rows.size());
  for (const auto& r : rows) {
    body.push_back({r.problem, r.algorithm,
                    r.seed ? std::to_string(*r.seed) : "-",
                    r.particles ? std::to_string(*r.particles) : "-",
                    short_real(r.best_f), r.gap ? short_real(*r.gap) : "-",
                    std::to_string(r.evaluations), short_real(r.time_ms)});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t j = 0; j < head.size(); ++j) width[j] = head[j].size();
  for (const auto& row : body) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      if (j < 2) {
        out << row[j] << std::string(width[j] - row[j].size(), ' ');
      } else {
        out << std::string(width[j] - row[j].size(), ' ') << row[j];
      }
    }
    out << '\n';
  };
  print_row(head);
  for (const auto& row : body) print_row(row);
}

}  // namespace

int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  validate_spec(spec);

  // Resolve problems up front so bad names fail before any work runs.
  std::vector<Problem> resolved;
  resolved.reserve(spec.problems.size());
  for (const std::string& name : spec.problems) {
    resolved.push_back(spec.concave ? problems::concave_variant(name)
                                    : problems::find(name).problem);
  }

  std::vector<Cell> cells;
  for (const std::string& name : spec.problems) {
    for (const std::string& algo : spec.algorithms) {
      if (deterministic(algo)) {
        // One run: no seed or particle count enters the computation.
        cells.push_back({name, algo, std::nullopt, std::nullopt});
        continue;
      }
      for (std::uint64_t seed : spec.seeds) {
        for (int p : spec.particles) {
          cells.push_back({name, algo, seed, p});
        }
      }
    }
  }
  std::map<std::string, const Problem*> by_name;
  for (std::size_t i = 0; i < spec.problems.size(); ++i) {
    by_name[spec.problems[i]] = &resolved[i];
  }

  struct Failure {
    std::size_t index;
    int code;
    std::string message;
  };
  std::vector<std::optional<report::ResultRow>> rows(cells.size());
  std::vector<std::vector<TracePoint>> traces(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex fail_mutex;
  std::optional<Failure> failure;
  std::atomic<bool> stop_flag{false};

  auto worker = [&] {
    for (;;) {
      if (stop_flag.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& c = cells[i];
      try {
        const RunResult r = execute(*by_name.at(c.problem), c, spec);
        report::ResultRow row;
        row.problem = c.problem;
        row.algorithm = upper(c.algo);
        if (c.seed) row.seed = static_cast<std::int64_t>(*c.seed);
        row.particles = c.particles;
        row.iteration_limit = spec.stop.iteration_limit;
        row.best_f = r.best_f;
        row.f_star = by_name.at(c.problem)->f_star;
        row.gap = r.gap;
        row.evaluations = r.evaluations;
        row.time_ms = r.wall_time * 1000.0;
        rows[i] = std::move(row);
        traces[i] = std::move(r.trace);
      } catch (const std::exception& e) {
        const int code = dynamic_cast<const SpecError*>(&e) ? 2 : 1;
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!failure || i < failure->index) {
          failure = Failure{i, code, cell_label(c) + ": " + e.what()};
        }
        stop_flag.store(true);
      }
    }
  };

  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), cells.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t k = 0; k < n_workers; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (failure) {
    err << "run failed: " << failure->message << '\n';
    return failure->code;
  }

  std::vector<report::ResultRow> final_rows;
  final_rows.reserve(cells.size());
  for (auto& r : rows) final_rows.push_back(std::move(*r));

  print_summary(final_rows, out);

  if (!spec.out.empty()) {
    report::emit(final_rows, spec.format, spec.out);
    out << final_rows.size() << " rows written to " << spec.out << '\n';
    if (spec.trace) {
      const std::string trace_path = spec.out + ".trace.csv";
      std::ofstream tf(trace_path, std::ios::binary);
      if (!tf) throw EvalError("cannot open trace file '" + trace_path + "'");
      tf << "problem,algorithm,seed,particles,iteration,best_f,step_distance\n";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        for (const TracePoint& t : traces[i]) {
          tf << c.problem << ',' << upper(c.algo) << ','
             << (c.seed ? std::to_string(*c.seed) : "") << ','
             << (c.particles ? std::to_string(*c.particles) : "") << ','
             << t.iteration << ',' << report::format_real(t.best_f) << ','
             << report::format_real(t.step_distance) << '\n';
        }
      }
      if (!tf.good()) throw EvalError("write failure on '" + trace_path + "'");
      out << "traces written to " << trace_path << '\n';
    }
  }
  return 0;
}

// ------------------------------------------------------------ cmd_table

namespace {

struct MissingCells : std::runtime_error {
  explicit MissingCells(const std::string& what) : std::runtime_error(what) {}
};

struct TableData {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> body;  // first column is the problem
};

std::vector<std::string> sorted_problems(const std::vector<report::ResultRow>& rows) {
  std::set<std::string> names;
  for (const auto& r : rows) names.insert(r.problem);
  return {names.begin(), names.end()};
}

std::optional<double> median_metric(const std::vector<report::ResultRow>& rows,
                                    const std::string& problem,
                                    const std::string& algo, bool use_gap,
                                    std::optional<int> particles = std::nullopt,
                                    std::optional<long long> iters = std::nullopt) {
  std::vector<double> vals;
  for (const auto& r : rows) {
    if (r.problem != problem || r.algorithm != algo) continue;
    if (particles && (!r.particles || *r.particles != *particles)) continue;
    if (iters && r.iteration_limit != *iters) continue;
    if (use_gap) {
      if (!r.gap) return std::nullopt;
      vals.push_back(*r.gap);
    } else {
      vals.push_back(r.best_f);
    }
  }
  if (vals.empty()) return std::nullopt;
  return report::aggregate_values(vals).median;
}

void require_no_missing(const std::vector<std::string>& missing,
                        const std::string& style) {
  if (missing.empty()) return;
  std::string msg = style + ": missing cells:";
  for (const auto& m : missing) msg += ' ' + m;
  throw MissingCells(msg);
}

TableData build_table2(const std::vector<report::ResultRow>& rows) {
  const std::vector<std::string> algos = {"CC", "RCC", "PSO", "RPSO"};
  TableData t;
  t.columns = {"problem"};
  for (const auto& a : algos) t.columns.push_back("f_" + a);
  for (const auto& a : algos) t.columns.push_back("gap_" + a);
  std::vector<std::string> missing;
  for (const std::string& p : sorted_problems(rows)) {
    std::vector<std::string> row{p};
    for (const auto& a : algos) {
      auto v = median_metric(rows, p, a, false);
      if (!v) missing.push_back(p + "/" + a);
      row.push_back(v ? report::format_real(*v) : "");
    }
    for (const auto& a : algos) {
      auto v = median_metric(rows, p, a, true);
      if (!v) missing.push_back(p + "/" + a + "(gap)");
      row.push_back(v ? report::format_real(*v) : "");
    }
    t.body.push_back(std::move(row));
  }
  require_no_missing(missing, "table2");
  return t;
}

TableData build_sweep_table(const std::vector<report::ResultRow>& rows,
                            bool by_particles, const std::string& style) {
  const std::vector<std::string> algos = {"PSO", "RPSO"};
  std::set<long long> levels;
  for (const auto& r : rows) {
    if (r.algorithm != "PSO" && r.algorithm != "RPSO") continue;
    if (by_particles) {
      if (r.particles) levels.insert(*r.particles);
    } else {
      levels.insert(r.iteration_limit);
    }
  }
  if (levels.empty()) throw MissingCells(style + ": no PSO/RPSO rows in input");
  TableData t;
  t.columns = {"problem"};
  for (const auto& a : algos) {
    for (long long lv : levels) {
      t.columns.push_back("gap_" + a + "_" + std::to_string(lv));
    }
  }
  std::vector<std::string> missing;
  for (const std::string& p : sorted_problems(rows)) {
    std::vector<std::string> row{p};
    for (const auto& a : algos) {
      for (long long lv : levels) {
        auto v = by_particles
                     ? median_metric(rows, p, a, true, static_cast<int>(lv))
                     : median_metric(rows, p, a, true, std::nullopt, lv);
        if (!v) missing.push_back(p + "/" + a + "@" + std::to_string(lv));
        row.push_back(v ? report::format_real(*v) : "");
      }
    }
    t.body.push_back(std::move(row));
  }
  require_no_missing(missing, style);
  return t;
}

TableData build_table6(const std::vector<report::ResultRow>& rows) {
  TableData t;
  t.columns = {"problem", "rpso_wins", "pso_wins", "ties"};
  for (const std::string& p : sorted_problems(rows)) {
    std::vector<report::ResultRow> subset;
    for (const auto& r : rows) {
      if (r.problem == p) subset.push_back(r);
    }
    report::WinCounts wc;
    try {
      wc = report::win_counts(subset, "RPSO", "PSO", 1e-9);
    } catch (const SpecError& e) {
      throw MissingCells(std::string("table6: ") + e.what());
    }
    t.body.push_back({p, std::to_string(wc.wins_a), std::to_string(wc.wins_b),
                      std::to_string(wc.ties)});
  }
  return t;
}

TableData build_table7(const std::vector<report::ResultRow>& rows) {
  const std::vector<std::string> algos = {"PSO", "RPSO"};
  TableData t;
  t.columns = {"problem", "f_PSO", "f_RPSO", "gap_PSO", "gap_RPSO"};
  std::vector<std::string> missing;
  for (const std::string& p : sorted_problems(rows)) {
    std::vector<std::string> row{p};
    for (const auto& a : algos) {
      auto v = median_metric(rows, p, a, false);
      if (!v) missing.push_back(p + "/" + a);
      row.push_back(v ? report::format_real(*v) : "");
    }
    for (const auto& a : algos) {
      auto v = median_metric(rows, p, a, true);
      if (!v) missing.push_back(p + "/" + a + "(gap)");
      row.push_back(v ? report::format_real(*v) : "");
    }
    t.body.push_back(std::move(row));
  }
  require_no_missing(missing, "table7");
  return t;
}

void write_table(const TableData& t, const std::string& out_path,
                 std::ostream& out) {
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw EvalError("cannot open '" + out_path + "'");
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (j) f << ',';
    f << t.columns[j];
  }
  f << '\n';
  for (const auto& row : t.body) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) f << ',';
      f << row[j];
    }
    f << '\n';
  }
  if (!f.good()) throw EvalError("write failure on '" + out_path + "'");

  // Aligned text rendering; numeric cells shortened for readability.
  std::vector<std::vector<std::string>> body;
  for (const auto& row : t.body) {
    std::vector<std::string> pretty;
    pretty.push_back(row[0]);
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j].empty()) {
        pretty.emplace_back("-");
      } else {
        char* end = nullptr;
        const double v = std::strtod(row[j].c_str(), &end);
        pretty.push_back(*end == '\0' ? short_real(v) : row[j]);
      }
    }
    body.push_back(std::move(pretty));
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  for (const auto& row : body) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      if (j == 0) {
        out << row[j] << std::string(width[j] - row[j].size(), ' ');
      } else {
        out << std::string(width[j] - row[j].size(), ' ') << row[j];
      }
    }
    out << '\n';
  };
  print_row(t.columns);
  for (const auto& row : body) print_row(row);
}

}  // namespace

int cmd_table(const std::string& style, const std::string& in_path,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  try {
    const std::vector<report::ResultRow> rows = report::parse_rows(in_path);
    TableData t;
    if (style == "table2") {
      t = build_table2(rows);
    } else if (style == "table3") {
      t = build_sweep_table(rows, false, "table3");
    } else if (style == "table5") {
      t = build_sweep_table(rows, true, "table5");
    } else if (style == "table6") {
      t = build_table6(rows);
    } else if (style == "table7") {
      t = build_table7(rows);
    } else {
      throw SpecError("table: unknown style '" + style + "'");
    }
    write_table(t, out_path, out);
    return 0;
  } catch (const SpecError&) {
    throw;  // usage problem: let the caller map it to exit 2
  } catch (const std::exception& e) {
    err << "table failed: " << e.what() << '\n';
    return 1;
  }
}

// ----------------------------------------------------------- cmd_verify

int cmd_verify(std::ostream& out, std::ostream& err, bool inject_registry_fault) {
  verify::SuiteOptions opts;
  std::vector<verify::SuiteResult> results;
  if (inject_registry_fault) {
    auto entries = problems::registry();
    entries.front().problem.f_star = *entries.front().problem.f_star + 0.5;
    results.push_back(verify::registry_consistency(entries));
  } else {
    results = verify::run_all(opts);
  }
  bool all_passed = true;
  for (const auto& r : results) {
    out << "suite=" << r.name << " status=" << (r.passed ? "pass" : "fail")
        << " cases=" << r.cases;
    if (!r.passed) out << " counterexample=\"" << r.detail << '"';
    out << '\n';
    all_passed = all_passed && r.passed;
  }
  if (!all_passed) {
    err << "verify: at least one property suite failed\n";
    return 1;
  }
  out << "verify: all " << results.size() << " suites passed\n";
  return 0;
}

// -------------------------------------------------------------- run_cli

namespace {

std::vector<std::uint64_t> resolve_seeds(const std::string& arg) {
  if (arg.find(',') != std::string::npos) {
    std::vector<std::uint64_t> seeds;
    for (const std::string& tok : split_csv(arg)) {
      const std::string t = trim(tok);
      if (t.empty()) throw SpecError("seeds: empty entry in list '" + arg + "'");
      const long long v = parse_int(t, "seeds");
      if (v < 0) throw SpecError("seeds: negative seed '" + t + "'");
      seeds.push_back(static_cast<std::uint64_t>(v));
    }
    return seeds;
  }
  const long long count = parse_int(trim(arg), "seeds");
  if (count < 1) throw SpecError("seeds: count must be >= 1, got '" + arg + "'");
  std::uint64_t base = 1;
  if (const char* env = std::getenv("RADIAL_SEED")) {
    errno = 0;
    char* end = nullptr;
    base = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
      throw SpecError(std::string("RADIAL_SEED: not an integer: '") + env + "'");
    }
  }
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    seeds[i] = base + static_cast<std::uint64_t>(i);
  }
  return seeds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Derivative-free box-constrained minimization benchmark harness"};
  app.name("radls");
  app.require_subcommand(1);

  // run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run optimizers over benchmark problems");
  std::vector<std::string> problems_arg{"all"};
  std::vector<std::string> algos_arg{"cc", "rcc", "pso", "rpso"};
  std::string seeds_arg = "1";
  std::vector<int> particles_arg{30};
  GridParams grid;
  StopConfig stop;
  SwarmConfig swarm;
  bool concave = false;
  std::string out_path;
  std::string format_arg = "csv";
  bool trace = false;
  int jobs = 1;
  std::string config_path;

  auto* o_problems = run->add_option("--problems", problems_arg,
                                     "Comma-separated problem names, or 'all'")
                         ->delimiter(',');
  auto* o_algos = run->add_option("--algos", algos_arg,
                                  "Subset of cc,rcc,pso,rpso")
                      ->delimiter(',');
  auto* o_seeds = run->add_option(
      "--seeds", seeds_arg,
      "Seed count (base from RADIAL_SEED, default 1) or explicit list 'a,b,c'");
  auto* o_particles =
      run->add_option("--particles", particles_arg, "Swarm sizes")->delimiter(',');
  auto* o_iters = run->add_option("--iters", stop.iteration_limit, "Iteration limit");
  auto* o_t0 = run->add_option("--t0", grid.t0, "Initial grid offset");
  auto* o_beta = run->add_option("--beta", grid.beta, "Grid spacing");
  auto* o_alpha = run->add_option("--alpha", grid.alpha, "Grid shrink factor");
  auto* o_tfloor = run->add_option("--tfloor", grid.t_floor, "Smallest grid offset");
  auto* o_eps = run->add_option("--eps", stop.epsilon, "Stagnation step threshold");
  auto* o_countbar = run->add_option("--count-bar", stop.count_bar,
                                     "Stagnation count that stops a run");
  auto* o_w = run->add_option("--w", swarm.w, "Inertia weight");
  auto* o_c1 = run->add_option("--c1", swarm.c1, "Cognitive coefficient");
  auto* o_c2 = run->add_option("--c2", swarm.c2, "Social coefficient");
  auto* o_concave = run->add_flag("--concave", concave,
                                  "Minimize the negated (concave) variants");
  auto* o_out = run->add_option("--out", out_path, "Result file path");
  auto* o_format = run->add_option("--format", format_arg, "csv or json")
                       ->check(CLI::IsMember({"csv", "json"}));
  auto* o_trace = run->add_flag("--trace", trace, "Write per-iteration traces");
  auto* o_jobs = run->add_option("--jobs", jobs, "Worker threads for independent runs");
  run->add_option("--config", config_path,
                  "TOML/JSON file with the same keys; flags override");

  // table --------------------------------------------------------------
  auto* table = app.add_subcommand("table", "Render comparison tables from results");
  std::string style, table_in, table_out;
  table->add_option("--style", style, "table2|table3|table5|table6|table7")
      ->required()
      ->check(CLI::IsMember({"table2", "table3", "table5", "table6", "table7"}));
  table->add_option("--in", table_in, "Result file (csv or json)")->required();
  table->add_option("--out", table_out, "Output CSV path")->required();

  // verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle and property suites");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("radls");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (run->parsed()) {
      if (!config_path.empty()) {
        const auto config = load_config(config_path);
        auto want = [&](const char* key, const CLI::Option* opt) -> const std::string* {
          if (opt->count() > 0) return nullptr;  // explicit flag wins
          auto it = config.find(key);
          return it == config.end() ? nullptr : &it->second;
        };
        if (const auto* v = want("problems", o_problems)) problems_arg = split_csv(*v);
        if (const auto* v = want("algos", o_algos)) algos_arg = split_csv(*v);
        if (const auto* v = want("seeds", o_seeds)) seeds_arg = *v;
        if (const auto* v = want("particles", o_particles)) {
          particles_arg.clear();
          for (const std::string& tok : split_csv(*v)) {
            particles_arg.push_back(static_cast<int>(parse_int(trim(tok), "particles")));
          }
        }
        if (const auto* v = want("iters", o_iters)) {
          stop.iteration_limit = parse_int(*v, "iters");
        }
        if (const auto* v = want("t0", o_t0)) grid.t0 = parse_double(*v, "t0");
        if (const auto* v = want("beta", o_beta)) grid.beta = parse_double(*v, "beta");
        if (const auto* v = want("alpha", o_alpha)) grid.alpha = parse_double(*v, "alpha");
        if (const auto* v = want("tfloor", o_tfloor)) {
          grid.t_floor = parse_double(*v, "tfloor");
        }
        if (const auto* v = want("eps", o_eps)) stop.epsilon = parse_double(*v, "eps");
        if (const auto* v = want("count-bar", o_countbar)) {
          stop.count_bar = parse_int(*v, "count-bar");
        }
        if (const auto* v = want("w", o_w)) swarm.w = parse_double(*v, "w");
        if (const auto* v = want("c1", o_c1)) swarm.c1 = parse_double(*v, "c1");
        if (const auto* v = want("c2", o_c2)) swarm.c2 = parse_double(*v, "c2");
        if (const auto* v = want("concave", o_concave)) concave = parse_bool(*v, "concave");
        if (const auto* v = want("out", o_out)) out_path = *v;
        if (const auto* v = want("format", o_format)) {
          if (*v != "csv" && *v != "json") {
            throw SpecError("format: expected csv or json, got '" + *v + "'");
          }
          format_arg = *v;
        }
        if (const auto* v = want("trace", o_trace)) trace = parse_bool(*v, "trace");
        if (const auto* v = want("jobs", o_jobs)) {
          jobs = static_cast<int>(parse_int(*v, "jobs"));
        }
      }

      RunSpec spec;
      for (std::string& a : algos_arg) {
        for (char& c : a) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      spec.algorithms = algos_arg;
      bool all = false;
      for (const std::string& p : problems_arg) all = all || p == "all";
      if (all) {
        spec.problems.clear();
        if (concave) {
          spec.problems = problems::concave_names();
        } else {
          for (const auto& e : problems::registry()) spec.problems.push_back(e.problem.name);
        }
      } else {
        spec.problems = problems_arg;
      }
      spec.seeds = resolve_seeds(seeds_arg);
      spec.particles = particles_arg;
      spec.grid = grid;
      spec.stop = stop;
      spec.swarm = swarm;
      spec.concave = concave;
      spec.out = out_path;
      spec.format = format_arg == "json" ? report::Format::Json : report::Format::Csv;
      spec.trace = trace;
      spec.jobs = jobs;
      return cmd_run(spec, out, err);
    }
    if (table->parsed()) return cmd_table(style, table_in, table_out, out, err);
    if (verify_cmd->parsed()) return cmd_verify(out, err);
    err << "usage error: no command given\n";
    return 2;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace radls::cli
