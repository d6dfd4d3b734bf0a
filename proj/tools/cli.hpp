#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace orbhc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kSizeGuard = 3, kInvariantViolation = 4 };

struct JobConfig {
  // action descriptor
  std::string kind;    // "linear", "torus" or "findim"
  std::size_t n = 0;   // dimension of C^n / (C^*)^n, matrix size for findim
  std::string preset;  // "Sn" or "M2-azumaya", empty for explicit generators
  Json generators = Json::array();
  // command parameters
  std::size_t q_max = 3, d_max = 4;
  bool oracle = false;
  std::size_t group_limit = 20000;
  std::size_t block_limit = 2500;      // basis size of one polynomial bar block
  std::size_t findim_limit = 200000;   // tensors in the largest findim bar degree

  Json to_json() const;
};

// Throws ConfigError on anything that does not match the schema.
JobConfig parse_config(const Json& j);
JobConfig load_config(const std::string& path);

// Named job presets, one per acceptance scenario.
std::vector<std::string> preset_names();
JobConfig preset_config(const std::string& name);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbhc::cli
