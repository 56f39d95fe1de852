#include "pcr/rules_minc.hpp"

#include <set>

namespace pcr {

template <class T>
std::map<Element, T> ebr_reallocate(const std::map<Element, T>& free_raw, const Model& model) {
  std::map<Element, T> out;
  for (const auto& [e, v] : free_raw) out[model.canonical(e)] += v;
  return out;
}

std::vector<Element> minc_destinations(const Element& conflict, const Model& model,
                                       MincVersion version) {
  std::set<Element> dest;
  auto add = [&](Mask m) {
    Element d = model.canonical(Element::clause(m));
    if (!d.empty()) dest.insert(d);
  };
  if (version == MincVersion::A) {
    const auto& cl = conflict.clauses();
    const std::size_t k = cl.size();
    for (std::size_t pick = 1; pick < (std::size_t{1} << k); ++pick) {
      Mask m = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (pick >> i & 1) m |= cl[i];
      add(m);
    }
  } else {
    const Mask u = conflict.support();
    for (Mask sub = u; sub != 0; sub = (sub - 1) & u) add(sub);
  }
  return {dest.begin(), dest.end()};
}

template <class T>
FusionResult<T> minc(const MassMatrix<T>& matrix, MincVersion version) {
  const Model& model = matrix.fusion_model();
  const auto starred = ebr_reallocate(free_conjunctive(matrix), model);
  FusionResult<T> out;
  for (const auto& [e, v] : starred)
    if (!e.empty()) out.masses.emplace(e, v);

  for (const auto& [x, v] : starred) {
    if (!x.empty() || is_zero(v)) continue;
    out.conflict += v;
    out.partial[x] += v;

    auto spread = [&](const std::vector<std::pair<Element, T>>& weighted) {
      T K(0);
      for (const auto& [d, w] : weighted) K += w;
      if (is_zero(K)) return false;
      for (const auto& [d, w] : weighted) {
        if (is_zero(w)) continue;
        const T share = v * w / K;
        out.masses[d] += share;
        out.transfers.push_back({x, d, share, K});
      }
      return true;
    };

    std::vector<std::pair<Element, T>> by_mass;
    for (const auto& d : minc_destinations(x, model, version)) {
      auto it = starred.find(d);
      by_mass.emplace_back(d, it == starred.end() ? T(0) : it->second);
    }
    if (spread(by_mass)) continue;

    // Every destination is at zero: fall back to the column sums of the
    // conflict's components.
    std::set<Element> components;
    for (Mask c : x.clauses()) {
      Element d = model.canonical(Element::clause(c));
      if (!d.empty()) components.insert(d);
    }
    std::vector<std::pair<Element, T>> by_column;
    for (const auto& d : components) by_column.emplace_back(d, matrix.column_sum(d));
    if (spread(by_column)) continue;

    route_fallback(model, x.support(), x, v, out);
  }
  return out;
}

template std::map<Element, double> ebr_reallocate(const std::map<Element, double>&, const Model&);
template std::map<Element, Rational> ebr_reallocate(const std::map<Element, Rational>&,
                                                    const Model&);
template FusionResult<double> minc(const MassMatrix<double>&, MincVersion);
template FusionResult<Rational> minc(const MassMatrix<Rational>&, MincVersion);

}  // namespace pcr
