#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicat {

// Machine-readable command report. Serialization uses ordered_json and a
// fixed layout so identical inputs and seed produce byte-identical output.
struct Stage {
  std::string name;
  std::string outcome;
  std::string witness;  // empty = omitted from JSON
};

struct Report {
  std::string command;
  std::string status;  // "pass" | "fail" | "unknown"
  std::vector<Stage> stages;
  std::uint64_t determinism_seed = 0;

  void add(std::string name, std::string outcome, std::string witness = "") {
    stages.push_back(Stage{std::move(name), std::move(outcome), std::move(witness)});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["status"] = status;
    j["stages"] = nlohmann::ordered_json::array();
    for (const auto& s : stages) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      js["outcome"] = s.outcome;
      if (!s.witness.empty()) js["witness"] = s.witness;
      j["stages"].push_back(std::move(js));
    }
    j["determinism_seed"] = determinism_seed;
    return j;
  }

  std::string render_json() const { return to_json().dump(2) + "\n"; }

  std::string render_text() const {
    std::string out = command + ": " + status + "\n";
    for (const auto& s : stages) {
      out += "  " + s.name + ": " + s.outcome;
      if (!s.witness.empty()) out += "  [" + s.witness + "]";
      out += "\n";
    }
    out += "  seed: " + std::to_string(determinism_seed) + "\n";
    return out;
  }
};

}  // namespace bicat
