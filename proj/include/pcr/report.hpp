#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcr/scenario.hpp"

namespace pcr {

struct RuleRun {
  RuleId id;
  std::string label;
  std::optional<FusionResult<double>> result;
  std::string error;  // set when the rule failed (e.g. TotalConflict)
  std::string invalid;  // set when the output does not re-validate as a bba
  double seconds = 0;
};

struct Report {
  std::string scenario;
  ModelPtr model;
  std::size_t sources = 0;
  std::vector<RuleRun> runs;
  /// Sequential mode: one trajectory per rule, one run per fusion step.
  std::vector<std::vector<RuleRun>> trajectories;
  /// Pairwise max-abs-difference between rule outputs (compare mode).
  std::vector<std::vector<double>> max_diff;
  std::vector<std::pair<std::size_t, std::size_t>> coincide;

  bool failed() const;
};

inline constexpr double kCoincideTolerance = 1e-9;

std::string rule_label(RuleId id, const RuleOptions& options);

Report run_scenario(const Scenario& sc, const std::vector<RuleId>& rules,
                    const RuleOptions& options);
/// Folds the prior with each later bba (sources then stream), keeping only
/// the fused result as the next prior.
Report sequential_fusion(const Scenario& sc, const std::vector<RuleId>& rules,
                         const RuleOptions& options);
/// Adds the pairwise difference matrix and coincident pairs to `report`.
void compare_rules(Report& report);

std::string format_table(const Report& report, int precision, bool timing = false);
std::string format_machine(const Report& report, bool timing = false);

}  // namespace pcr
