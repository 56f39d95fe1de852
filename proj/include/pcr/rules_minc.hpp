#pragma once

#include "pcr/rules_core.hpp"

namespace pcr {

enum class MincVersion { A, B };

/// Moves the mass of every non-empty free-lattice element onto its canonical
/// form under `model`; pure conflicts keep their free form.
template <class T>
std::map<Element, T> ebr_reallocate(const std::map<Element, T>& free_raw, const Model& model);

/// Destination set of a partial conflict for the given version.
std::vector<Element> minc_destinations(const Element& conflict, const Model& model,
                                       MincVersion version);

/// Transfers are recorded with the conflict as `from` and K as used.
template <class T>
FusionResult<T> minc(const MassMatrix<T>& matrix, MincVersion version);

}  // namespace pcr
