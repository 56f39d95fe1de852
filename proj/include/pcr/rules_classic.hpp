#pragma once

#include "pcr/rules_core.hpp"

namespace pcr {

inline constexpr double kTotalConflictMargin = 1e-12;

enum class WaoMode { Static, Dynamic };

/// Weights for the weighted operator, keyed by canonical element (∅ allowed).
template <class T>
using WeightAssignment = std::map<Element, T>;

template <class T>
FusionResult<T> dempster(const MassMatrix<T>& matrix);
template <class T>
FusionResult<T> smets(const MassMatrix<T>& matrix);
template <class T>
FusionResult<T> yager(const MassMatrix<T>& matrix);
/// Pairwise rule; more than two sources are folded left to right.
template <class T>
FusionResult<T> dubois_prade(const MassMatrix<T>& matrix);
template <class T>
FusionResult<T> dsm_hybrid(const MassMatrix<T>& matrix);
template <class T>
FusionResult<T> weighted_operator(const MassMatrix<T>& matrix, const WeightAssignment<T>& weights);
template <class T>
WeightAssignment<T> wao_weights(const MassMatrix<T>& matrix, WaoMode mode);
template <class T>
FusionResult<T> wao(const MassMatrix<T>& matrix, WaoMode mode);

}  // namespace pcr
