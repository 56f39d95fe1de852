#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcr/bba.hpp"

namespace pcr {

class TotalConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One redistribution step: `mass` moved from a conflict (or product term)
/// `from` onto `to`; `K` is the proportionality denominator used.
template <class T>
struct Transfer {
  Element from;
  Element to;
  T mass;
  T K;
};

struct FallbackEvent {
  enum class Kind { Disjunctive, TotalIgnorance, Closure, Void };
  Kind kind;
  Element from;
  Element to;
};

const char* to_string(FallbackEvent::Kind kind);

template <class T>
struct FusionResult {
  std::map<Element, T> masses;
  T conflict = T(0);
  std::map<Element, T> partial;
  std::vector<Transfer<T>> transfers;
  std::vector<FallbackEvent> events;
  bool under_normalized = false;  // mass was lost (static WAO)
  bool void_problem = false;      // everything empty in a closed world
  bool order_dependent = false;
  std::vector<std::size_t> order;

  T total() const {
    T sum(0);
    for (const auto& [e, v] : masses) sum += v;
    return sum;
  }
  T mass(const Element& e) const {
    auto it = masses.find(e);
    return it == masses.end() ? T(0) : it->second;
  }
};

FusionResult<double> to_double(const FusionResult<Rational>& r);
inline FusionResult<double> to_double(const FusionResult<double>& r) { return r; }

template <class T>
struct RawConjunctive {
  std::map<Element, T> masses;  // includes empty intersections, keyed canonically
  ConflictLedger<T> ledger;
};

template <class T>
RawConjunctive<T> conjunctive(const MassMatrix<T>& matrix);

/// Conjunctive consensus computed in the free lattice (keys in free form).
template <class T>
std::map<Element, T> free_conjunctive(const MassMatrix<T>& matrix);

template <class T>
FusionResult<T> disjunctive(const MassMatrix<T>& matrix);

/// Non-empty part of a raw conjunctive result, plus k and partials.
template <class T>
FusionResult<T> conjunctive_result(const RawConjunctive<T>& raw);

/// Moves `mass` onto the first non-empty of u, I_t, theta0/∅ and records it.
template <class T>
void route_fallback(const Model& model, Mask u, const Element& from, const T& mass,
                    FusionResult<T>& out);

}  // namespace pcr
