#pragma once

// Ford-Johnson MergeInsertion on a weak-heap tournament tree.
//
// Pairing. For each level size m = n, n/2, n/4, ... (while m >= 2) node v in
// [0, m/2) is joined with d_child(v, m), the bottommost node of its right
// spine below index m. These partners are pairwise distinct and all lie in
// [m/2, m); for odd m exactly one node of that range stays unpaired. Joins are
// max-oriented, so the winner (the "a" element) stays at v and the loser
// ("b") stays at the partner. A join that swaps flips the partner's reverse
// bit, which re-hangs the loser's previous partners under the winner's new
// position. After the whole tournament, the level-m partner of the element at
// node v is again found by walking v's spine below index m. The single
// exception is the odd-level flip that can pull the unpaired node into a
// spine; the unpaired node of every level is recorded and skipped.
//
// Insertion. Elements are never moved after the tournament. An index array
// (order) holds node ids; the recursion leaves order[0, m/2) sorted, the merge
// step lays out b_0, a_0, ..., a_{m/2-1} followed by the pending b's in
// insertion order and binary-inserts them one by one.
//
// Block k holds b_i for t_{k-1} <= i < t_k (0-based), t_k = (2^{k+1} + (-1)^k)/3,
// inserted in descending index order. The basic variant searches a fixed
// window of t_{k-1} + min(t_k, #b) - 1 chain elements, i.e. 2^k - 1 for a
// complete block (exactly k comparisons). The improved variant searches only
// the elements before the partner a_i, whose chain position is tracked.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "sortlab/counting.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/weak_heap.hpp"

namespace sortlab {

/// t_k = (2^{k+1} + (-1)^k) / 3: 1, 1, 3, 5, 11, 21, 43, ...
constexpr std::size_t block_boundary(unsigned k) {
  const std::uint64_t p = std::uint64_t{1} << (k + 1);
  return static_cast<std::size_t>((k % 2 == 0 ? p + 1 : p - 1) / 3);
}

struct ScheduledInsertion {
  std::size_t index;  // 0-based b index
  unsigned block;
};

/// Order in which b_1 .. b_{count-1} are inserted (b_0 starts the chain).
inline std::vector<ScheduledInsertion> insertion_schedule(std::size_t count) {
  std::vector<ScheduledInsertion> out;
  if (count < 2) return out;
  out.reserve(count - 1);
  for (unsigned k = 2; block_boundary(k - 1) < count; ++k) {
    const std::size_t lo = block_boundary(k - 1);
    const std::size_t hi = std::min(block_boundary(k), count);
    for (std::size_t i = hi; i-- > lo;) out.push_back({i, k});
  }
  return out;
}

enum class MergeInsertionVariant { basic, improved };

/// Observer hook: (b index, block, window length, comparisons used).
struct NoInsertionObserver {
  void operator()(std::size_t, unsigned, std::size_t, std::uint64_t) const {}
};

template <class T, class Cmp, class Observer = NoInsertionObserver>
class MergeInsertionSorter {
 public:
  MergeInsertionSorter(std::span<T> data, MergeInsertionVariant variant, Cmp& cmp,
                       Observer observer = {})
      : s_(data),
        variant_(variant),
        cmp_(&cmp),
        heap_(data),
        order_(data.size()),
        observer_(std::move(observer)) {
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  }

  /// Pairing joins for every level, largest level first.
  void build_tournament() {
    Reversed<Cmp> max_cmp(*cmp_);
    std::vector<std::size_t> partners;
    std::vector<bool> hit;
    for (std::size_t m = s_.size(); m >= 2; m /= 2) {
      const std::size_t half = m / 2;
      partners.assign(half, 0);
      hit.assign(m - half, false);
      for (std::size_t v = 0; v < half; ++v) {
        partners[v] = heap_.d_child(v, m);
        hit[partners[v] - half] = true;
      }
      std::size_t unpaired = m;
      if (m % 2 == 1) {
        unpaired = half + static_cast<std::size_t>(std::find(hit.begin(), hit.end(), false) - hit.begin());
      }
      unpaired_.push_back(unpaired);
      for (std::size_t v = 0; v < half; ++v) heap_.join(v, partners[v], max_cmp);
    }
  }

  /// Level-m partner of the element currently at node v (v < m/2).
  std::size_t partner(std::size_t v, std::size_t m) const {
    const std::size_t skip = unpaired_for(m);
    std::size_t x = heap_.right_child(v);
    for (std::size_t y = heap_.left_child(x); y < m; y = heap_.left_child(x)) x = y;
    return x == skip ? x / 2 : x;
  }

  void sort() {
    const std::size_t n = s_.size();
    if (n < 2) return;
    build_tournament();
    merge_levels(n);
    apply_order();
  }

  std::span<const std::size_t> order() const { return order_; }
  const WeakHeap<T>& heap() const { return heap_; }

 private:
  std::size_t unpaired_for(std::size_t m) const {
    std::size_t level = 0;
    for (std::size_t size = s_.size(); size != m; size /= 2) ++level;
    return unpaired_[level];
  }

  void merge_levels(std::size_t m) {
    if (m < 2) return;
    merge_levels(m / 2);
    merge(m);
  }

  void merge(std::size_t m) {
    const std::size_t half = m / 2;
    const std::size_t count = m - half;  // number of b's
    const std::span<const T> data(s_.data(), s_.size());

    bs_.resize(count);
    for (std::size_t i = 0; i < half; ++i) bs_[i] = partner(order_[i], m);
    if (count > half) bs_[half] = unpaired_for(m);

    // chain: b_0, a_0 .. a_{half-1}; then pending b's in insertion order
    std::copy_backward(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(half),
                       order_.begin() + static_cast<std::ptrdiff_t>(half) + 1);
    order_[0] = bs_[0];
    const auto schedule = insertion_schedule(count);
    for (std::size_t k = 0; k < schedule.size(); ++k) order_[half + 1 + k] = bs_[schedule[k].index];

    const bool improved = variant_ == MergeInsertionVariant::improved;
    if (improved) {
      a_pos_.resize(half);
      for (std::size_t i = 0; i < half; ++i) a_pos_[i] = i + 1;
    }

    std::size_t chain = half + 1;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      const auto [i, block] = schedule[k];
      std::size_t window;
      if (improved) {
        window = i < half ? a_pos_[i] : chain;
      } else {
        window = block_boundary(block - 1) + std::min(block_boundary(block), count) - 1;
      }
      std::size_t pos;
      if constexpr (std::is_same_v<Observer, NoInsertionObserver>) {
        pos = binary_insert(data, std::span<std::size_t>(order_), {0, window, chain}, *cmp_);
      } else {
        const std::uint64_t before = cmp_->tally().comparisons;
        pos = binary_insert(data, std::span<std::size_t>(order_), {0, window, chain}, *cmp_);
        observer_(i, block, window, cmp_->tally().comparisons - before);
      }
      ++chain;
      if (improved) {
        // only b's still pending (inserted later, lower index in this block
        // or any index in later blocks) need their partner positions
        for (std::size_t j = k + 1; j < schedule.size(); ++j) {
          const std::size_t b = schedule[j].index;
          if (b < half && a_pos_[b] >= pos) ++a_pos_[b];
        }
      }
    }
  }

  // s[i] <- s[order[i]] by cycle swaps.
  void apply_order() {
    std::vector<bool> done(order_.size(), false);
    for (std::size_t start = 0; start < order_.size(); ++start) {
      if (done[start]) continue;
      std::size_t j = start;
      while (true) {
        done[j] = true;
        const std::size_t k = order_[j];
        if (k == start) break;
        cmp_->swap(s_[j], s_[k]);
        j = k;
      }
    }
  }

  std::span<T> s_;
  MergeInsertionVariant variant_;
  Cmp* cmp_;
  WeakHeap<T> heap_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> unpaired_;
  std::vector<std::size_t> bs_;
  std::vector<std::size_t> a_pos_;
  Observer observer_;
};

/// Sorts `a` ascending with MergeInsertion.
template <class T, class Cmp>
void merge_insertion_sort(std::span<T> a, MergeInsertionVariant variant, Cmp& cmp) {
  MergeInsertionSorter<T, Cmp>(a, variant, cmp).sort();
}

}  // namespace sortlab
