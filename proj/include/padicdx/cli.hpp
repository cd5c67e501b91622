#pragma once

// Command-line front end: every subcommand delegates to one kernel operation
// and prints a single JSON document.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "padicdx/charcycle.hpp"
#include "padicdx/scalar.hpp"

namespace padicdx::cli {

struct BlowupSpec {
  Rational center;
  long level = 1;
};

struct SessionConfig {
  Prime prime{2};
  long level = 1;        ///< k
  long micro_level = 1;  ///< r
  long eps_exp = -6;     ///< precision p^eps_exp
  std::optional<BlowupSpec> blowup;
  std::optional<std::string> plot_path;
  std::string format = "ascii";  ///< ascii | svg | json

  /// Throws ConfigError when an invariant fails (r >= 1, k >= 0, eps < 0).
  void validate() const;
};

/// Parses "c=<scalar>,m=<int>". Throws ConfigError / SyntaxError.
BlowupSpec parse_blowup_spec(const std::string& text, Prime p);

/// Parses "a, b; c, d" into a square matrix of functions.
std::vector<std::vector<std::string>> split_matrix(const std::string& text);

const std::vector<std::string>& subcommands();

/// Runs one subcommand. Kernel errors propagate as exceptions.
nlohmann::json run(const std::string& command, const SessionConfig& cfg,
                   const std::vector<std::string>& inputs);

/// Full command line entry point; returns the process exit code
/// (0 success, 1 parse/config error, 2 domain error).
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace padicdx::cli
