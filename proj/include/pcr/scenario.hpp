#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcr/engine.hpp"

namespace pcr {

/// Malformed or invalid scenario input (CLI exit code 2).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  ModelPtr model;         // fusion model
  ModelPtr source_model;  // model the sources were elicited under
  std::vector<Bba> sources;
  std::vector<Bba> stream;
  std::vector<RuleId> rules;
  RuleOptions options;
};

/// Parses a JSON scenario document; `name` is used in error messages.
Scenario parse_scenario(const std::string& text, const std::string& name);
Scenario load_scenario(const std::string& path);

}  // namespace pcr
