#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "radls/core.hpp"
#include "radls/optimizers.hpp"
#include "radls/reporting.hpp"

namespace radls::cli {

// Fully resolved description of a `run` invocation: "all" is already
// expanded, seed counts already turned into explicit seed lists.
struct RunSpec {
  std::vector<std::string> problems;
  std::vector<std::string> algorithms{"cc", "rcc", "pso", "rpso"};
  std::vector<std::uint64_t> seeds{1};
  std::vector<int> particles{30};
  GridParams grid;
  StopConfig stop;
  SwarmConfig swarm;
  bool concave = false;
  std::string out;
  report::Format format = report::Format::Csv;
  bool trace = false;
  int jobs = 1;
};

// Entry point used by main() and by the CLI tests; args excludes the
// program name. Exit status: 0 success, 1 evaluation/runtime failure,
// 2 invalid usage or spec.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_table(const std::string& style, const std::string& in_path,
              const std::string& out_path, std::ostream& out,
              std::ostream& err);
int cmd_verify(std::ostream& out, std::ostream& err,
               bool inject_registry_fault = false);

}  // namespace radls::cli
