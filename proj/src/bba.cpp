#include "pcr/bba.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tuples.hpp"

namespace pcr {

Element parse_element(std::string_view text, const Model& model) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  std::string_view trimmed =
      first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1);
  if (trimmed == "∅" || trimmed == "{}") return Element::void_set();
  if (model.closure() && (trimmed == "θ0" || trimmed == "theta0")) return Element::closure();
  return model.canonical(parse_expr(trimmed, model.frame()));
}

Bba::Bba(ModelPtr model, const std::map<Element, double>& masses) : model_(std::move(model)) {
  for (const auto& [e, v] : masses) masses_[model_->canonical(e)] += v;
  std::erase_if(masses_, [](const auto& kv) { return kv.second >= 0 && kv.second < kPruneBelow; });
}

Bba Bba::from_exprs(ModelPtr model, const std::vector<std::pair<std::string, double>>& masses) {
  std::map<Element, double> m;
  for (const auto& [text, v] : masses) m[parse_element(text, *model)] += v;
  return Bba(std::move(model), m);
}

double Bba::mass(const Element& e) const {
  auto it = masses_.find(e);
  return it == masses_.end() ? 0.0 : it->second;
}

double Bba::total() const {
  double sum = 0;
  for (const auto& [e, v] : masses_) sum += v;
  return sum;
}

Bba validate_bba(Bba b) {
  for (const auto& [e, v] : b.masses()) {
    if (v < 0 || !std::isfinite(v)) {
      std::ostringstream os;
      os << "NegativeMass: " << to_string(e, b.model().frame()) << " has mass " << v;
      throw BbaError(BbaError::Kind::NegativeMass, v, os.str());
    }
    const bool open_void = b.model().world() == Model::World::Open && e.is_void();
    if (e.empty() && !open_void) {
      std::ostringstream os;
      os << "MassOnEmpty: " << to_string(e, b.model().frame()) << " is empty but has mass " << v;
      throw BbaError(BbaError::Kind::MassOnEmpty, v, os.str());
    }
  }
  const double sum = b.total();
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os << "NotNormalized(" << sum << "): masses must sum to 1";
    throw BbaError(BbaError::Kind::NotNormalized, sum, os.str());
  }
  return b;
}

Bba vacuous_bba(ModelPtr model) {
  Element it = model->total_ignorance();
  return Bba(std::move(model), {{it, 1.0}});
}

template <class T>
MassMatrix<T> make_matrix(ModelPtr fusion, std::vector<std::map<Element, T>> rows) {
  MassMatrix<T> m;
  m.model = std::move(fusion);
  for (auto& row : rows) {
    std::map<Element, T> keyed;
    for (auto& [e, v] : row) {
      if (is_zero(v)) continue;
      keyed[m.model->canonical(e)] += v;
    }
    m.sources.push_back(std::move(keyed));
  }
  for (const auto& row : m.sources)
    for (const auto& [e, v] : row) m.columns.try_emplace(e, T(0));
  for (auto& [e, c] : m.columns)
    for (const auto& row : m.sources) {
      auto it = row.find(e);
      if (it != row.end()) c += it->second;
    }
  return m;
}

template MassMatrix<double> make_matrix(ModelPtr, std::vector<std::map<Element, double>>);
template MassMatrix<Rational> make_matrix(ModelPtr, std::vector<std::map<Element, Rational>>);

MassMatrix<double> make_matrix(const std::vector<Bba>& sources, ModelPtr fusion) {
  if (sources.empty()) throw std::invalid_argument("at least one source is required");
  if (!fusion) fusion = sources.front().model_ptr();
  std::vector<std::map<Element, double>> rows;
  for (const auto& b : sources) {
    if (!(b.model().frame() == fusion->frame()))
      throw std::invalid_argument("sources must share the fusion frame");
    rows.push_back(b.masses());
  }
  return make_matrix<double>(std::move(fusion), std::move(rows));
}

bool short_decimal(const MassMatrix<double>& m) {
  return std::all_of(m.sources.begin(), m.sources.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(),
                       [](const auto& kv) { return is_short_decimal(kv.second); });
  });
}

std::vector<Element> involved_factors(const std::vector<Element>& distinct, const Model& model) {
  std::vector<Element> live;
  for (const auto& e : distinct)
    if (!model.is_empty(e)) live.push_back(e);
  if (live.size() <= 1) return live;
  std::vector<Element> out;
  for (std::size_t i = 0; i < live.size(); ++i) {
    Element rest;
    bool first = true;
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (j == i) continue;
      rest = first ? live[j] : free_meet(rest, live[j]);
      first = false;
    }
    if (!free_leq(rest, live[i])) out.push_back(live[i]);
  }
  return out.empty() ? live : out;
}

template <class T>
ConflictLedger<T> conflict_ledger(const MassMatrix<T>& matrix) {
  ConflictLedger<T> ledger;
  const Model& model = matrix.fusion_model();
  auto focal = detail::focal_lists(matrix);
  detail::for_each_tuple<T>(focal, [&](const std::vector<std::size_t>& idx, const T& product,
                                       const Element& meet) {
    Element c = model.canonical(meet);
    if (!c.empty() || is_zero(product)) return;
    ConflictTerm<T> term;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      term.factors.push_back(focal[i][idx[i]].first);
      term.masses.push_back(focal[i][idx[i]].second);
    }
    term.product = product;
    term.intersection = c;
    term.distinct = term.factors;
    std::sort(term.distinct.begin(), term.distinct.end());
    term.distinct.erase(std::unique(term.distinct.begin(), term.distinct.end()),
                        term.distinct.end());
    term.recipients = involved_factors(term.distinct, model);
    for (const auto& r : term.recipients) ledger.involved.insert(r);
    ledger.partial[c] += product;
    ledger.total += product;
    ledger.terms.push_back(std::move(term));
  });
  return ledger;
}

template ConflictLedger<double> conflict_ledger(const MassMatrix<double>&);
template ConflictLedger<Rational> conflict_ledger(const MassMatrix<Rational>&);

}  // namespace pcr
