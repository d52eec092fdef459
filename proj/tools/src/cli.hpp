#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace staircase::cli {

enum class Command { capacities, ehrhart, accumulation, scan, verify, report_43, theorem_report };
enum class Format { text, csv, json };

struct RunConfig {
  Command command = Command::capacities;
  // Command-specific options by long name without dashes, e.g. "ellipsoid"
  // -> {"1", "4/3"}. Numeric values stay as text until run() parses them.
  std::map<std::string, std::vector<std::string>> parameters;
  Format format = Format::text;
  std::optional<std::string> output_path;
  int precision = 12;
  std::int64_t t_max = 300;
  std::size_t n_cap = 2000;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Throws UsageError (with CLI11's message) on bad flags. --help output goes
// to `out` and yields nullopt.
std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& out);

// Executes the command, writing results to config.output_path or `out` and
// diagnostics to `err`. Returns one of the exit statuses above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_arguments + run, mapping usage errors to kExitUsage.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace staircase::cli
