#pragma once

#include <paraqt/io.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace paraqt::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kPromiseViolated = 2, kUsage = 3, kResource = 4 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;  // empty: standard output
  double tau = 0.05;
  double delta = 0.05;
  std::optional<std::uint64_t> seed;
  std::optional<int> k;
  std::string mode;  // command specific; empty selects the default
  bool compact = false;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<int> n;
  int blocks = 0;
  int block_size = 0;
  std::string bits;
  double lower_bound = 0.0;
};

struct Outcome {
  int exit_code = kYes;
  io::Json report;
};

/// Runs one command. Library errors propagate; run() maps them to exit codes.
Outcome dispatch(const RunConfig& config);

/// Full command line entry: parses argv, dispatches, writes the JSON report.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace paraqt::cli
