#include "pcr/rules_classic.hpp"

#include <sstream>

#include "tuples.hpp"

namespace pcr {

template <class T>
FusionResult<T> dempster(const MassMatrix<T>& matrix) {
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  const T& k = raw.ledger.total;
  if (to_double(k) >= 1.0 - kTotalConflictMargin) {
    std::ostringstream os;
    os << "TotalConflict: k = " << to_double(k) << ", Dempster's rule is undefined";
    throw TotalConflict(os.str());
  }
  const T scale = T(1) - k;
  for (auto& [e, v] : out.masses) v /= scale;
  return out;
}

template <class T>
FusionResult<T> smets(const MassMatrix<T>& matrix) {
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  if (!is_zero(raw.ledger.total)) out.masses[Element::void_set()] += raw.ledger.total;
  return out;
}

template <class T>
FusionResult<T> yager(const MassMatrix<T>& matrix) {
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  if (is_zero(raw.ledger.total)) return out;
  const Model& model = matrix.fusion_model();
  Element it = model.total_ignorance();
  if (!it.empty()) {
    out.masses[it] += raw.ledger.total;
    out.transfers.push_back({Element::void_set(), it, raw.ledger.total, T(0)});
  } else {
    route_fallback(model, model.frame().full_mask(), Element::void_set(), raw.ledger.total, out);
  }
  return out;
}

template <class T>
FusionResult<T> dubois_prade(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw_k = conflict_ledger(matrix);
  FusionResult<T> out;
  std::map<Element, T> acc = matrix.sources.at(0);
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    FusionResult<T> step;
    for (const auto& [x, mx] : acc)
      for (const auto& [y, my] : matrix.sources[i]) {
        const T p = mx * my;
        Element c = model.meet(x, y);
        if (!c.empty()) {
          step.masses[c] += p;
          continue;
        }
        Element u = model.join(x, y);
        if (!u.empty()) {
          step.masses[u] += p;
          step.transfers.push_back({c, u, p, T(0)});
        } else {
          route_fallback(model, u.support(), c, p, step);
        }
      }
    acc = std::move(step.masses);
    for (auto& t : step.transfers) out.transfers.push_back(std::move(t));
    for (auto& e : step.events) out.events.push_back(std::move(e));
    out.void_problem = out.void_problem || step.void_problem;
  }
  out.masses = std::move(acc);
  out.conflict = raw_k.total;
  out.partial = raw_k.partial;
  out.order_dependent = matrix.size() > 2;
  return out;
}

template <class T>
FusionResult<T> dsm_hybrid(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  FusionResult<T> out;
  auto focal = detail::focal_lists(matrix);
  detail::for_each_tuple<T>(focal, [&](const std::vector<std::size_t>& idx, const T& p,
                                       const Element& meet) {
    Element c = model.canonical(meet);
    if (!c.empty()) {
      out.masses[c] += p;
      return;
    }
    out.conflict += p;
    out.partial[c] += p;
    bool all_empty = true;
    Mask u = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Element& f = focal[i][idx[i]].first;
      all_empty = all_empty && model.is_empty(f);
      u |= f.support();
    }
    // S2 sends fully-empty tuples to the union of their disjunctive forms;
    // S3 sends the rest to u(c(X1∩...∩Xs)).
    route_fallback(model, all_empty ? u : c.support(), c, p, out);
  });
  return out;
}

template <class T>
FusionResult<T> weighted_operator(const MassMatrix<T>& matrix, const WeightAssignment<T>& weights) {
  T wsum(0);
  for (const auto& [e, w] : weights) {
    if (to_double(w) < 0) throw std::invalid_argument("weights must be non-negative");
    wsum += w;
  }
  if (std::abs(to_double(wsum) - 1.0) > kSumTolerance)
    throw std::invalid_argument("weights must sum to 1");
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  const T& k = raw.ledger.total;
  if (is_zero(k)) return out;
  for (const auto& [e, w] : weights) {
    if (is_zero(w)) continue;
    const T share = w * k;
    if (e.is_void() || e.is_closure() || !model.is_empty(e)) {
      out.masses[e] += share;
      out.transfers.push_back({Element::void_set(), e, share, T(0)});
    }
  }
  if (to_double(out.total()) < 1.0 - kSumTolerance) out.under_normalized = true;
  return out;
}

template <class T>
WeightAssignment<T> wao_weights(const MassMatrix<T>& matrix, WaoMode mode) {
  const Model& model = matrix.fusion_model();
  WeightAssignment<T> w;
  if (mode == WaoMode::Static) {
    const T s(static_cast<long>(matrix.size()));
    for (const auto& [e, c] : matrix.columns) w[e] = c / s;
    return w;
  }
  T d(0);
  Mask u = 0;
  for (const auto& [e, c] : matrix.columns) {
    u |= e.support();
    if (!e.empty()) d += c;
  }
  if (is_zero(d)) {
    w[model.fallback(u)] = T(1);
    return w;
  }
  for (const auto& [e, c] : matrix.columns)
    if (!e.empty()) w[e] = c / d;
  return w;
}

template <class T>
FusionResult<T> wao(const MassMatrix<T>& matrix, WaoMode mode) {
  return weighted_operator(matrix, wao_weights(matrix, mode));
}

#define PCR_INSTANTIATE(T)                                                                \
  template FusionResult<T> dempster(const MassMatrix<T>&);                                \
  template FusionResult<T> smets(const MassMatrix<T>&);                                   \
  template FusionResult<T> yager(const MassMatrix<T>&);                                   \
  template FusionResult<T> dubois_prade(const MassMatrix<T>&);                            \
  template FusionResult<T> dsm_hybrid(const MassMatrix<T>&);                              \
  template FusionResult<T> weighted_operator(const MassMatrix<T>&, const WeightAssignment<T>&); \
  template WeightAssignment<T> wao_weights(const MassMatrix<T>&, WaoMode);                \
  template FusionResult<T> wao(const MassMatrix<T>&, WaoMode);

PCR_INSTANTIATE(double)
PCR_INSTANTIATE(Rational)

}  // namespace pcr
