#include "pcr/rules_core.hpp"

#include "tuples.hpp"

namespace pcr {

const char* to_string(FallbackEvent::Kind kind) {
  switch (kind) {
    case FallbackEvent::Kind::Disjunctive: return "disjunctive-form";
    case FallbackEvent::Kind::TotalIgnorance: return "total-ignorance";
    case FallbackEvent::Kind::Closure: return "theta0";
    case FallbackEvent::Kind::Void: return "empty-set";
  }
  return "?";
}

FusionResult<double> to_double(const FusionResult<Rational>& r) {
  FusionResult<double> out;
  for (const auto& [e, v] : r.masses) out.masses.emplace(e, to_double(v));
  out.conflict = to_double(r.conflict);
  for (const auto& [e, v] : r.partial) out.partial.emplace(e, to_double(v));
  for (const auto& t : r.transfers)
    out.transfers.push_back({t.from, t.to, to_double(t.mass), to_double(t.K)});
  out.events = r.events;
  out.under_normalized = r.under_normalized;
  out.void_problem = r.void_problem;
  out.order_dependent = r.order_dependent;
  out.order = r.order;
  return out;
}

template <class T>
std::map<Element, T> free_conjunctive(const MassMatrix<T>& matrix) {
  std::map<Element, T> acc = matrix.sources.at(0);
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    std::map<Element, T> next;
    for (const auto& [x, mx] : acc)
      for (const auto& [y, my] : matrix.sources[i]) next[free_meet(x, y)] += mx * my;
    acc = std::move(next);
  }
  return acc;
}

template <class T>
RawConjunctive<T> conjunctive(const MassMatrix<T>& matrix) {
  RawConjunctive<T> raw;
  const Model& model = matrix.fusion_model();
  for (const auto& [e, v] : free_conjunctive(matrix)) raw.masses[model.canonical(e)] += v;
  if (matrix.size() >= 2) raw.ledger = conflict_ledger(matrix);
  return raw;
}

template <class T>
FusionResult<T> conjunctive_result(const RawConjunctive<T>& raw) {
  FusionResult<T> out;
  for (const auto& [e, v] : raw.masses)
    if (!e.empty()) out.masses.emplace(e, v);
  out.conflict = raw.ledger.total;
  out.partial = raw.ledger.partial;
  return out;
}

template <class T>
void route_fallback(const Model& model, Mask u, const Element& from, const T& mass,
                    FusionResult<T>& out) {
  Element to = model.fallback(u);
  FallbackEvent::Kind kind;
  if (to.is_void())
    kind = FallbackEvent::Kind::Void;
  else if (to.is_closure())
    kind = FallbackEvent::Kind::Closure;
  else if (u != 0 && to == model.canonical(Element::clause(u)))
    kind = FallbackEvent::Kind::Disjunctive;
  else
    kind = FallbackEvent::Kind::TotalIgnorance;
  out.events.push_back({kind, from, to});
  out.transfers.push_back({from, to, mass, T(0)});
  out.masses[to] += mass;
  if (to.is_void() && model.world() == Model::World::Closed) out.void_problem = true;
}

template <class T>
FusionResult<T> disjunctive(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  std::map<Element, T> acc = matrix.sources.at(0);
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    std::map<Element, T> next;
    for (const auto& [x, mx] : acc)
      for (const auto& [y, my] : matrix.sources[i]) next[free_join(x, y)] += mx * my;
    acc = std::move(next);
  }
  FusionResult<T> out;
  for (const auto& [e, v] : acc) {
    Element c = model.canonical(e);
    if (c.empty())
      route_fallback(model, e.support(), c, v, out);
    else
      out.masses[c] += v;
  }
  return out;
}

#define PCR_INSTANTIATE(T)                                                              \
  template std::map<Element, T> free_conjunctive(const MassMatrix<T>&);                 \
  template RawConjunctive<T> conjunctive(const MassMatrix<T>&);                         \
  template FusionResult<T> conjunctive_result(const RawConjunctive<T>&);                \
  template void route_fallback(const Model&, Mask, const Element&, const T&,            \
                               FusionResult<T>&);                                       \
  template FusionResult<T> disjunctive(const MassMatrix<T>&);

PCR_INSTANTIATE(double)
PCR_INSTANTIATE(Rational)

}  // namespace pcr
