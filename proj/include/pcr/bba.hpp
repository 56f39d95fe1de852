#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pcr/lattice.hpp"
#include "pcr/scalar.hpp"

namespace pcr {

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kPruneBelow = 1e-12;

class BbaError : public std::runtime_error {
 public:
  enum class Kind { NotNormalized, NegativeMass, MassOnEmpty };
  BbaError(Kind kind, double value, const std::string& what)
      : std::runtime_error(what), kind_(kind), value_(value) {}
  Kind kind() const noexcept { return kind_; }
  /// The offending sum (NotNormalized) or mass.
  double value() const noexcept { return value_; }

 private:
  Kind kind_;
  double value_;
};

using ModelPtr = std::shared_ptr<const Model>;

/// Mass assignment over canonical elements of one model. Construction
/// canonicalizes and merges keys and prunes float dust; validate_bba checks
/// the normalization rules.
class Bba {
 public:
  Bba(ModelPtr model, const std::map<Element, double>& masses);
  /// Keys are set expressions; "∅" or "{}" denote the classical empty set.
  static Bba from_exprs(ModelPtr model,
                        const std::vector<std::pair<std::string, double>>& masses);

  const Model& model() const noexcept { return *model_; }
  const ModelPtr& model_ptr() const noexcept { return model_; }
  const std::map<Element, double>& masses() const noexcept { return masses_; }
  double mass(const Element& e) const;
  double total() const;

 private:
  ModelPtr model_;
  std::map<Element, double> masses_;
};

Bba validate_bba(Bba b);
Bba vacuous_bba(ModelPtr model);
Element parse_element(std::string_view text, const Model& model);

/// Sources re-keyed under the fusion model. Rows may carry mass on elements
/// the fusion model has since declared empty (dynamic fusion).
template <class T>
struct MassMatrix {
  ModelPtr model;
  std::vector<std::map<Element, T>> sources;
  std::map<Element, T> columns;

  std::size_t size() const noexcept { return sources.size(); }
  const Model& fusion_model() const { return *model; }
  T column_sum(const Element& e) const {
    auto it = columns.find(e);
    return it == columns.end() ? T(0) : it->second;
  }
  T mass(std::size_t source, const Element& e) const {
    auto it = sources.at(source).find(e);
    return it == sources[source].end() ? T(0) : it->second;
  }
};

/// Builds the matrix; `fusion` defaults to the model of the first source.
MassMatrix<double> make_matrix(const std::vector<Bba>& sources, ModelPtr fusion = nullptr);

template <class T>
MassMatrix<T> make_matrix(ModelPtr fusion, std::vector<std::map<Element, T>> rows);

template <class U, class T>
MassMatrix<U> convert_matrix(const MassMatrix<T>& m) {
  std::vector<std::map<Element, U>> rows;
  for (const auto& src : m.sources) {
    std::map<Element, U> row;
    for (const auto& [e, v] : src) {
      if constexpr (std::is_same_v<T, double>)
        row.emplace(e, from_double<U>(v));
      else
        row.emplace(e, U(to_double(v)));
    }
    rows.push_back(std::move(row));
  }
  return make_matrix<U>(m.model, std::move(rows));
}

/// True when every mass has at most six decimals, so the exact path applies.
bool short_decimal(const MassMatrix<double>& m);

template <class T>
T column_sum(const MassMatrix<T>& matrix, const Element& x) {
  return matrix.column_sum(x);
}

template <class T>
struct ConflictTerm {
  std::vector<Element> factors;  // one per source
  std::vector<T> masses;
  T product;
  Element intersection;             // canonical, empty
  std::vector<Element> distinct;    // sorted distinct factors
  std::vector<Element> recipients;  // involved non-empty factors
};

template <class T>
struct ConflictLedger {
  std::vector<ConflictTerm<T>> terms;
  std::map<Element, T> partial;
  T total = T(0);
  std::set<Element> involved;
};

/// Distinct non-empty factors of a product term that take part in its
/// emptiness: those not containing the meet of the other non-empty factors.
std::vector<Element> involved_factors(const std::vector<Element>& distinct, const Model& model);

template <class T>
ConflictLedger<T> conflict_ledger(const MassMatrix<T>& matrix);

}  // namespace pcr
