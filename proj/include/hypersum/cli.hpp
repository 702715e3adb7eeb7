#ifndef HYPERSUM_CLI_HPP
#define HYPERSUM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/identities.hpp"

namespace hypersum {

enum class OutputFormat { text, json };

struct IntRange {
  int first = 0;
  int last = 0;
};

/// "a..b" or a single integer "a"; throws std::invalid_argument.
IntRange parse_range(const std::string& text);

struct CliConfig {
  std::string command;  // compute, verify or table
  std::optional<int> r;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<std::string> method;
  int digits = 15;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> filter;
  std::optional<IntRange> r_range;
  std::optional<IntRange> m_range;
  bool timing = false;  // report wall-clock times; off keeps output byte-stable
};

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Parses and runs one command. Documents go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_compute(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Runs the given cases and prints their reports; 0 iff every case passes.
int emit_verification(const std::vector<IdentityCase>& cases, const CliConfig& config, std::ostream& out,
                      std::ostream& err);

}  // namespace hypersum

#endif  // HYPERSUM_CLI_HPP
