#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral::cli {

struct RunConfig {
  std::string command;
  std::string family_file;
  std::string builtin;
  std::string matrix_file;
  std::string x0;
  std::string xi0;
  std::string indices;
  std::vector<std::string> directions;
  std::optional<long long> n_directions;
  std::uint64_t seed = 42;
  bool axes = false;
  std::optional<double> cluster_tol;
  std::optional<double> h0;
  std::string spectrum = "auto";
  double tol = 1e-5;
  std::string format;
  std::string out;
};

/// Bad flags or inconsistent input; maps to exit code 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  std::string body;
  bool warnings = false;
  bool failed = false;
};

CommandResult run_command(const RunConfig& config);

}  // namespace spectral::cli
