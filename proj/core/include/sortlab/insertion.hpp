#pragma once

// Binary insertion.
//
// `binary_insert` works through an index array so that MergeInsertion can
// reorder references without disturbing the data (and the tournament tree
// encoded in it). `insertion_sort` is the standalone base-case sorter and
// operates on the elements directly.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "sortlab/counting.hpp"

namespace sortlab {

/// A sorted run order[first, first + length) and the element order[target]
/// to be placed into it. target must not lie inside the run.
struct InsertionWindow {
  std::size_t first = 0;
  std::size_t length = 0;
  std::size_t target = 0;
};

/// Moves order[target] to order[first + length], then binary-searches its
/// slot among the `length + 1` candidate positions and rotates it there.
/// Only the index array changes. Returns the final position of the element.
///
/// The midpoint is rounded down and the probe tests key > run[mid], so an odd
/// number of candidates leaves the larger half at the lower indices and an
/// equal key lands before its run of equals. The search costs
/// ceil(log2(length + 1)) - 1 or ceil(log2(length + 1)) comparisons.
template <class T, class Cmp>
std::size_t binary_insert(std::span<const T> data, std::span<std::size_t> order,
                          InsertionWindow w, Cmp& cmp) {
  const std::size_t key_pos = w.first + w.length;
  if (w.target < key_pos || w.target >= order.size()) {
    throw std::invalid_argument("binary_insert: target must follow the window");
  }
  auto base = order.begin();
  if (w.target > key_pos) {
    std::rotate(base + static_cast<std::ptrdiff_t>(key_pos),
                base + static_cast<std::ptrdiff_t>(w.target),
                base + static_cast<std::ptrdiff_t>(w.target) + 1);
  }
  const T& key = data[order[key_pos]];
  std::size_t lo = w.first;
  std::size_t hi = key_pos;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cmp.less(data[order[mid]], key)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < key_pos) {
    std::rotate(base + static_cast<std::ptrdiff_t>(lo),
                base + static_cast<std::ptrdiff_t>(key_pos),
                base + static_cast<std::ptrdiff_t>(key_pos) + 1);
  }
  return lo;
}

/// Binary-search Insertionsort. Element k (0-based) is inserted into the
/// sorted prefix of length k with the same probe rule as binary_insert.
/// Shifting a block of length L counts as L swaps.
template <class T, class Cmp>
void insertion_sort(std::span<T> a, Cmp& cmp) {
  for (std::size_t k = 1; k < a.size(); ++k) {
    std::size_t lo = 0;
    std::size_t hi = k;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cmp.less(a[mid], a[k])) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo < k) {
      std::rotate(a.begin() + static_cast<std::ptrdiff_t>(lo),
                  a.begin() + static_cast<std::ptrdiff_t>(k),
                  a.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      cmp.add_swaps(k - lo);
    }
  }
}

}  // namespace sortlab
