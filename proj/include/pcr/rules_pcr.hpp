#pragma once

#include "pcr/rules_core.hpp"

namespace pcr {

/// Total conflict to every non-empty column, weighted by column sums.
template <class T>
FusionResult<T> pcr1(const MassMatrix<T>& matrix);
/// Total conflict to the involved sets only, weighted by column sums.
template <class T>
FusionResult<T> pcr2(const MassMatrix<T>& matrix);
/// Each partial conflict to its components, weighted by column sums.
template <class T>
FusionResult<T> pcr3(const MassMatrix<T>& matrix);
/// Each partial conflict to its components, weighted by conjunctive masses.
template <class T>
FusionResult<T> pcr4(const MassMatrix<T>& matrix);
/// Two-source closed form.
template <class T>
FusionResult<T> pcr5_pair(const MassMatrix<T>& matrix);
/// Product-term procedure for any number of sources.
template <class T>
FusionResult<T> pcr5_multi(const MassMatrix<T>& matrix);
/// Conjunctive fold of all sources but the last (in `order`), then the pair
/// rule against the last one. An empty `order` means 0..s-1.
template <class T>
FusionResult<T> pcr5_approximate(const MassMatrix<T>& matrix, std::vector<std::size_t> order = {});

}  // namespace pcr
