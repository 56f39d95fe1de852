#include "pcr/rules_pcr.hpp"

#include <algorithm>
#include <numeric>

namespace pcr {

namespace {

// Disjunctive form of all given sets, or theta0/∅ when it is empty.
template <class T>
void route_without_ignorance(const Model& model, Mask u, const T& mass, FusionResult<T>& out) {
  Element to = u != 0 ? model.canonical(Element::clause(u)) : Element::void_set();
  FallbackEvent::Kind kind = FallbackEvent::Kind::Disjunctive;
  if (to.empty()) {
    to = model.void_target();
    kind = to.is_closure() ? FallbackEvent::Kind::Closure : FallbackEvent::Kind::Void;
    if (to.is_void() && model.world() == Model::World::Closed) out.void_problem = true;
  }
  out.events.push_back({kind, Element::void_set(), to});
  out.transfers.push_back({Element::void_set(), to, mass, T(0)});
  out.masses[to] += mass;
}

// Splits `mass` over the weighted destinations; false when all weights are 0.
template <class T>
bool spread(const Element& from, const T& mass, const std::vector<std::pair<Element, T>>& weighted,
            FusionResult<T>& out) {
  T K(0);
  for (const auto& [d, w] : weighted) K += w;
  if (is_zero(K)) return false;
  for (const auto& [d, w] : weighted) {
    if (is_zero(w)) continue;
    const T share = mass * w / K;
    out.masses[d] += share;
    out.transfers.push_back({from, d, share, K});
  }
  return true;
}

Mask support_of(const std::vector<Element>& elems) {
  Mask u = 0;
  for (const auto& e : elems) u |= e.support();
  return u;
}

template <class T>
struct Group {
  T mass = T(0);
  Element intersection;
  std::vector<Element> recipients;
};

// Partial conflicts grouped by the distinct factor elements of their terms.
template <class T>
std::map<std::vector<Element>, Group<T>> group_terms(const ConflictLedger<T>& ledger) {
  std::map<std::vector<Element>, Group<T>> groups;
  for (const auto& term : ledger.terms) {
    auto& g = groups[term.distinct];
    g.mass += term.product;
    g.intersection = term.intersection;
    g.recipients = term.recipients;
  }
  return groups;
}

}  // namespace

template <class T>
FusionResult<T> pcr1(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  const T& k = raw.ledger.total;
  if (is_zero(k)) return out;
  std::vector<std::pair<Element, T>> weighted;
  Mask u = 0;
  for (const auto& [e, c] : matrix.columns) {
    u |= e.support();
    if (!e.empty()) weighted.emplace_back(e, c);
  }
  if (!spread(Element::void_set(), k, weighted, out)) route_without_ignorance(model, u, k, out);
  return out;
}

template <class T>
FusionResult<T> pcr2(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  const T& k = raw.ledger.total;
  if (is_zero(k)) return out;
  std::vector<std::pair<Element, T>> weighted;
  for (const auto& e : raw.ledger.involved) weighted.emplace_back(e, matrix.column_sum(e));
  if (!spread(Element::void_set(), k, weighted, out)) {
    Mask u = 0;
    for (const auto& term : raw.ledger.terms) u |= support_of(term.distinct);
    route_without_ignorance(model, u, k, out);
  }
  return out;
}

template <class T>
FusionResult<T> pcr3(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  for (const auto& [distinct, g] : group_terms(raw.ledger)) {
    std::vector<std::pair<Element, T>> weighted;
    for (const auto& r : g.recipients) weighted.emplace_back(r, matrix.column_sum(r));
    if (!spread(g.intersection, g.mass, weighted, out))
      route_fallback(model, support_of(distinct), g.intersection, g.mass, out);
  }
  return out;
}

template <class T>
FusionResult<T> pcr4(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  for (const auto& [distinct, g] : group_terms(raw.ledger)) {
    if (g.recipients.empty()) {
      route_fallback(model, support_of(distinct), g.intersection, g.mass, out);
      continue;
    }
    std::vector<std::pair<Element, T>> weighted;
    bool any_zero = false;
    for (const auto& r : g.recipients) {
      auto it = raw.masses.find(r);
      T w = it == raw.masses.end() ? T(0) : it->second;
      any_zero = any_zero || is_zero(w);
      weighted.emplace_back(r, w);
    }
    if (any_zero)
      for (auto& [r, w] : weighted) w = matrix.column_sum(r);
    if (!spread(g.intersection, g.mass, weighted, out))
      route_fallback(model, support_of(g.recipients), g.intersection, g.mass, out);
  }
  return out;
}

template <class T>
FusionResult<T> pcr5_pair(const MassMatrix<T>& matrix) {
  if (matrix.size() != 2) throw std::invalid_argument("pcr5_pair needs exactly two sources");
  const Model& model = matrix.fusion_model();
  FusionResult<T> out;
  for (const auto& [x, mx] : matrix.sources[0])
    for (const auto& [y, my] : matrix.sources[1]) {
      const T p = mx * my;
      Element c = model.meet(x, y);
      if (!c.empty()) {
        out.masses[c] += p;
        continue;
      }
      out.conflict += p;
      out.partial[c] += p;
      std::vector<Element> distinct{x};
      if (!(y == x)) distinct.push_back(y);
      std::sort(distinct.begin(), distinct.end());
      const auto r = involved_factors(distinct, model);
      if (r.size() == 2) {
        const T den = mx + my;
        const T to_x = mx * mx * my / den;
        const T to_y = my * my * mx / den;
        out.masses[x] += to_x;
        out.masses[y] += to_y;
        out.transfers.push_back({c, x, to_x, den});
        out.transfers.push_back({c, y, to_y, den});
      } else if (r.size() == 1) {
        out.masses[r[0]] += p;
        out.transfers.push_back({c, r[0], p, T(0)});
      } else {
        route_fallback(model, x.support() | y.support(), c, p, out);
      }
    }
  return out;
}

template <class T>
FusionResult<T> pcr5_multi(const MassMatrix<T>& matrix) {
  const Model& model = matrix.fusion_model();
  auto raw = conjunctive(matrix);
  FusionResult<T> out = conjunctive_result(raw);
  for (const auto& term : raw.ledger.terms) {
    if (term.recipients.empty()) {
      route_fallback(model, support_of(term.distinct), term.intersection, term.product, out);
      continue;
    }
    // Each recipient is weighted by the sub-product of the masses the
    // sources assigned to it within this term.
    std::vector<std::pair<Element, T>> weighted;
    for (const auto& r : term.recipients) {
      T w(1);
      for (std::size_t i = 0; i < term.factors.size(); ++i)
        if (term.factors[i] == r) w *= term.masses[i];
      weighted.emplace_back(r, w);
    }
    spread(term.intersection, term.product, weighted, out);
  }
  return out;
}

template <class T>
FusionResult<T> pcr5_approximate(const MassMatrix<T>& matrix, std::vector<std::size_t> order) {
  const std::size_t s = matrix.size();
  if (order.empty()) {
    order.resize(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check.size() != s || check[i] != i)
      throw std::invalid_argument("order must be a permutation of the sources");

  std::vector<std::map<Element, T>> rows;
  for (auto i : order) rows.push_back(matrix.sources[i]);
  if (s < 3) {
    auto out = pcr5_pair(make_matrix<T>(matrix.model, std::move(rows)));
    out.order = order;
    return out;
  }
  const Model& model = matrix.fusion_model();
  std::map<Element, T> last = rows.back();
  rows.pop_back();
  const auto stored = conjunctive(make_matrix<T>(matrix.model, std::move(rows))).masses;

  FusionResult<T> out;
  for (const auto& [x, mx] : stored)
    for (const auto& [y, my] : last) {
      const T p = mx * my;
      Element c = model.meet(x, y);
      if (!c.empty()) {
        out.masses[c] += p;
        continue;
      }
      out.conflict += p;
      out.partial[c] += p;
      std::vector<Element> distinct{x};
      if (!(y == x)) distinct.push_back(y);
      std::sort(distinct.begin(), distinct.end());
      const auto r = involved_factors(distinct, model);
      if (r.empty()) {
        route_fallback(model, x.support() | y.support(), c, p, out);
        continue;
      }
      std::vector<std::pair<Element, T>> weighted;
      for (const auto& e : r) weighted.emplace_back(e, e == x ? mx : my);
      spread(c, p, weighted, out);
    }
  out.order_dependent = true;
  out.order = order;
  return out;
}

#define PCR_INSTANTIATE(T)                                                              \
  template FusionResult<T> pcr1(const MassMatrix<T>&);                                  \
  template FusionResult<T> pcr2(const MassMatrix<T>&);                                  \
  template FusionResult<T> pcr3(const MassMatrix<T>&);                                  \
  template FusionResult<T> pcr4(const MassMatrix<T>&);                                  \
  template FusionResult<T> pcr5_pair(const MassMatrix<T>&);                             \
  template FusionResult<T> pcr5_multi(const MassMatrix<T>&);                            \
  template FusionResult<T> pcr5_approximate(const MassMatrix<T>&, std::vector<std::size_t>);

PCR_INSTANTIATE(double)
PCR_INSTANTIATE(Rational)

}  // namespace pcr
