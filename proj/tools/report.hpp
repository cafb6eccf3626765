#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace leafpow::cli {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Machine-readable record of one CLI run. Serialized with schema "v1".
struct RunReport {
  std::vector<std::string> command;
  std::string subcommand;
  struct Input {
    std::string role;
    std::string path;
    std::string digest;
  };
  std::vector<Input> inputs;
  std::string verdict;
  double elapsed_ms = 0;
  int exit_code = kExitAffirmative;
  struct Artifact {
    std::string role;
    std::string path;
  };
  std::vector<Artifact> artifacts;
  /// Subcommand-specific payload; merged into the top level.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void add_input(const std::string& role, const std::string& path, const std::string& contents);
  void add_artifact(const std::string& role, const std::string& path);
  nlohmann::ordered_json to_json() const;
};

}  // namespace leafpow::cli
