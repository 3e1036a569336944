#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hardy::cli {

enum class Subcommand { norms, roots, decompose, unwind, signal, verify, sweep };

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandConfig {
  Subcommand subcommand = Subcommand::norms;
  std::string input;
  std::string output;  ///< empty: standard output
  std::string weight = "dirichlet";
  std::size_t depth = 8;
  std::optional<std::size_t> cap;
  std::optional<double> tol;
  std::optional<double> root_tol;
  std::uint64_t seed = 0;
  std::string claim;
  std::optional<std::size_t> k;
  std::size_t count = 100;
  unsigned threads = 1;
  std::string roots;  ///< RootSet JSON for theorem3_truncated
  std::vector<std::size_t> caps;
  std::optional<std::size_t> samples;
  bool full = false;  ///< unwind: include every series in the JSON payload
};

/// Executes one command. Results go to `out` (or config.output), diagnostics to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CommandConfig and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
