#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mellin/config.hpp"

namespace mellin::cli {

/// Everything a subcommand reads. Numeric fields start at the library defaults.
struct RunConfig {
  std::string command;

  std::string in;
  std::string meta;
  std::string out;
  std::string density;
  std::string model;
  std::string samples;

  /// Mellin parameter; when absent, the model's own c or 0
  std::optional<double> c;
  /// band edge of the default box density F = 1 on [-T, T]
  double T = std::numbers::pi;
  double sigma = 1.0;
  int K = Defaults::sampling_K;
  int r_max = Defaults::r_max;
  double u_min = Defaults::u_min;
  double u_max = Defaults::u_max;
  std::size_t n = Defaults::n;
  double t_max = Defaults::t_max;
  std::size_t m = Defaults::m;
  /// evaluation points for reconstruct and kernel-apply; the grid when empty
  std::vector<double> x;

  /// csv | json, for tabular outputs
  std::string format = "csv";
  int verbosity = 1;
  /// turn diagnostics into exit code 3
  bool strict = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& text);

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidation = 2;
inline constexpr int kNumerical = 3;

/// argv[0] is the program name. Output files are written as side effects;
/// tables and messages go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace mellin::cli
