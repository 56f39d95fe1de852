#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcr/rules_classic.hpp"
#include "pcr/rules_minc.hpp"
#include "pcr/rules_pcr.hpp"

namespace pcr {

enum class RuleId {
  Conjunctive,
  Disjunctive,
  Dempster,
  Smets,
  Yager,
  DuboisPrade,
  DsmHybrid,
  Wao,
  MinC,
  Pcr1,
  Pcr2,
  Pcr3,
  Pcr4,
  Pcr5,
};

enum class Pcr5Variant { Exact, Approximate };

struct RuleOptions {
  MincVersion minc = MincVersion::A;
  WaoMode wao = WaoMode::Static;
  Pcr5Variant pcr5 = Pcr5Variant::Exact;
  std::vector<std::size_t> order;  // pcr5 approximate only
  Arithmetic arithmetic = Arithmetic::Auto;
};

struct RuleInfo {
  RuleId id;
  const char* name;
};

/// Registry order is also report order.
const std::vector<RuleInfo>& rule_registry();
std::optional<RuleId> rule_from_name(std::string_view name);
const char* rule_name(RuleId id);

template <class T>
FusionResult<T> apply_rule(RuleId id, const MassMatrix<T>& matrix, const RuleOptions& options);

/// Runs a rule, choosing exact rationals when `options.arithmetic` is Auto
/// and every mass has at most six decimals. A single source is returned
/// unchanged.
FusionResult<double> combine(RuleId id, const MassMatrix<double>& matrix,
                             const RuleOptions& options = {});

}  // namespace pcr
