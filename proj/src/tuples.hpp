#pragma once

#include <vector>

#include "pcr/bba.hpp"

namespace pcr::detail {

template <class T>
using Focal = std::vector<std::pair<Element, T>>;

template <class T>
std::vector<Focal<T>> focal_lists(const MassMatrix<T>& m) {
  std::vector<Focal<T>> out;
  for (const auto& row : m.sources) out.emplace_back(row.begin(), row.end());
  return out;
}

/// Visits every tuple of focal elements (one per source) in lexicographic
/// order. `visit(index, product, free_meet)` receives the focal indices, the
/// product of masses taken left to right, and the free-lattice intersection.
template <class T, class Visit>
void for_each_tuple(const std::vector<Focal<T>>& focal, Visit&& visit) {
  const std::size_t s = focal.size();
  if (s == 0) return;
  for (const auto& f : focal)
    if (f.empty()) return;
  std::vector<std::size_t> index(s, 0);
  std::vector<T> prod(s);
  std::vector<Element> meet(s);
  auto fill = [&](std::size_t from) {
    for (std::size_t d = from; d < s; ++d) {
      const auto& [e, v] = focal[d][index[d]];
      if (d == 0) {
        prod[0] = v;
        meet[0] = e;
      } else {
        prod[d] = prod[d - 1] * v;
        meet[d] = free_meet(meet[d - 1], e);
      }
    }
  };
  fill(0);
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(index), static_cast<const T&>(prod[s - 1]),
          static_cast<const Element&>(meet[s - 1]));
    std::size_t d = s;
    while (d > 0) {
      --d;
      if (++index[d] < focal[d].size()) break;
      index[d] = 0;
      if (d == 0) return;
    }
    fill(d);
  }
}

}  // namespace pcr::detail
