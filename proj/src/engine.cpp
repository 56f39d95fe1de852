#include "pcr/engine.hpp"

namespace pcr {

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> rules = {
      {RuleId::Conjunctive, "conjunctive"}, {RuleId::Disjunctive, "disjunctive"},
      {RuleId::Dempster, "dempster"},       {RuleId::Smets, "smets"},
      {RuleId::Yager, "yager"},             {RuleId::DuboisPrade, "dubois-prade"},
      {RuleId::DsmHybrid, "dsmh"},          {RuleId::Wao, "wao"},
      {RuleId::MinC, "minc"},               {RuleId::Pcr1, "pcr1"},
      {RuleId::Pcr2, "pcr2"},               {RuleId::Pcr3, "pcr3"},
      {RuleId::Pcr4, "pcr4"},               {RuleId::Pcr5, "pcr5"},
  };
  return rules;
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& r : rule_registry())
    if (name == r.name) return r.id;
  return std::nullopt;
}

const char* rule_name(RuleId id) {
  for (const auto& r : rule_registry())
    if (r.id == id) return r.name;
  return "?";
}

template <class T>
FusionResult<T> apply_rule(RuleId id, const MassMatrix<T>& matrix, const RuleOptions& options) {
  if (matrix.size() == 1) {
    FusionResult<T> out;
    out.masses = matrix.sources[0];
    return out;
  }
  switch (id) {
    case RuleId::Conjunctive: {
      auto raw = conjunctive(matrix);
      auto out = conjunctive_result(raw);
      for (const auto& [e, v] : raw.masses)
        if (e.empty()) out.masses[e] += v;
      return out;
    }
    case RuleId::Disjunctive: return disjunctive(matrix);
    case RuleId::Dempster: return dempster(matrix);
    case RuleId::Smets: return smets(matrix);
    case RuleId::Yager: return yager(matrix);
    case RuleId::DuboisPrade: return dubois_prade(matrix);
    case RuleId::DsmHybrid: return dsm_hybrid(matrix);
    case RuleId::Wao: return wao(matrix, options.wao);
    case RuleId::MinC: return minc(matrix, options.minc);
    case RuleId::Pcr1: return pcr1(matrix);
    case RuleId::Pcr2: return pcr2(matrix);
    case RuleId::Pcr3: return pcr3(matrix);
    case RuleId::Pcr4: return pcr4(matrix);
    case RuleId::Pcr5:
      if (options.pcr5 == Pcr5Variant::Approximate) return pcr5_approximate(matrix, options.order);
      return matrix.size() == 2 ? pcr5_pair(matrix) : pcr5_multi(matrix);
  }
  throw std::invalid_argument("unknown rule");
}

template FusionResult<double> apply_rule(RuleId, const MassMatrix<double>&, const RuleOptions&);
template FusionResult<Rational> apply_rule(RuleId, const MassMatrix<Rational>&,
                                           const RuleOptions&);

FusionResult<double> combine(RuleId id, const MassMatrix<double>& matrix,
                             const RuleOptions& options) {
  const bool exact = options.arithmetic == Arithmetic::Exact ||
                     (options.arithmetic == Arithmetic::Auto && short_decimal(matrix));
  if (exact) return to_double(apply_rule(id, convert_matrix<Rational>(matrix), options));
  return apply_rule(id, matrix, options);
}

}  // namespace pcr
