#pragma once

#include "svcoh/h2_solver.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svcoh {

enum class Format { Table, Json, Csv };

enum class Subcommand { Solve, Sweep, VerifyKnown, JacobiCheck };

struct CliConfig {
  Subcommand subcommand = Subcommand::Solve;
  Params params{0, 0};
  int window = 10;
  int inner = 6;
  Format format = Format::Table;
  std::optional<std::string> grid_path;
};

/// Exit codes of the command-line tool.
inline constexpr int kExitAgree = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;
inline constexpr int kExitInternal = 3;

struct GridParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One "lambda mu" pair per line; '#' starts a comment; blank lines ignored.
std::vector<Params> parse_grid(std::istream& in);

std::string emit(const H2Report& report, Format format);
std::string emit(const std::vector<H2Report>& reports, Format format);

/// Inverse of emit(report, Format::Json).
H2Report parse_report_json(const std::string& text);

/// Runs an already validated configuration.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it. Usage errors
/// print the offending flag to `err` and return kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace svcoh
