#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace thurstonkit {

// One named assertion of a verification report. `detail` carries the exact
// values compared, so a failure names what disagreed.
struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

inline nlohmann::json to_json(const Check& c) {
  return nlohmann::json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

}  // namespace thurstonkit
