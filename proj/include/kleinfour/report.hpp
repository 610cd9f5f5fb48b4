#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace kleinfour {

inline constexpr const char* kVersion = "1.0.0";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

inline nlohmann::json checks_json(const std::vector<Check>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

// Uniform CLI output: {command, inputs, result, checks, version}. Field order
// is the library's sorted-key order, so identical invocations are
// byte-identical; no timestamps anywhere.
inline nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs,
                                    nlohmann::json result, const std::vector<Check>& checks) {
  return nlohmann::json{{"command", command},
                        {"inputs", std::move(inputs)},
                        {"result", std::move(result)},
                        {"checks", checks_json(checks)},
                        {"version", kVersion}};
}

}  // namespace kleinfour
