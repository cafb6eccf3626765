#include "report.hpp"

#include "leafpow/formats.hpp"

namespace leafpow::cli {

void RunReport::add_input(const std::string& role, const std::string& path,
                          const std::string& contents) {
  inputs.push_back({role, path, digest(contents)});
}

void RunReport::add_artifact(const std::string& role, const std::string& path) {
  artifacts.push_back({role, path});
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["command"] = command;
  j["subcommand"] = subcommand;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const Input& in : inputs) {
    j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"digest", in.digest}});
  }
  j["verdict"] = verdict;
  j["elapsed_ms"] = elapsed_ms;
  j["exit_code"] = exit_code;
  j["artifacts"] = nlohmann::ordered_json::array();
  for (const Artifact& a : artifacts) j["artifacts"].push_back({{"role", a.role}, {"path", a.path}});
  for (const auto& [key, value] : details.items()) j[key] = value;
  return j;
}

}  // namespace leafpow::cli
