#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prefkb/suites.hpp"

namespace prefkb::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDisagreement = 3 };

struct RunConfig {
  std::string command;  // check, entail, model, replay, suite
  std::string input;    // KB file, proof file or suite name
  std::string kb_path;  // replay only
  std::optional<int> bound;
  EngineChoice engine = EngineChoice::Sat;
  bool total = false;
  std::optional<std::uint64_t> seed;
  std::string dot_path;
  double budget_seconds = 0;
};

/// Parses argv-style arguments (without the program name). Throws
/// CLI::ParseError subclasses on bad usage.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a configuration; everything user-visible goes to `out`,
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage and input errors to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefkb::cli
