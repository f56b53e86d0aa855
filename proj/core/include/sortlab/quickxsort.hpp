#pragma once

// QuickXsort: partition around the median of a random sample, sort one side
// with an external sorter X that uses the other side as its swap space, and
// continue with the other side. Instantiations:
//   quickmergesort     X = buffered Mergesort (merge.hpp)
//   quickweakheapsort  X = ExternalWeakHeapsort (weak_heap.hpp)
//   quickxysort        quickmergesort plus a fallback sorter Y for any step
//                      whose pivot lands too far from the median
//
// The loop keeps the unsorted side in [lo, hi); no recursion.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortlab/counting.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/merge.hpp"
#include "sortlab/random.hpp"
#include "sortlab/weak_heap.hpp"

namespace sortlab {

/// Thrown by the debug checks when the array stops being a permutation of
/// the input or an X phase leaves its part unsorted.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PivotMethod { sqrt_sample, median_of_three };

struct PivotPolicy {
  PivotMethod method = PivotMethod::sqrt_sample;
  std::uint64_t seed = 0;

  /// Odd and at most n. sqrt_sample: largest odd number <= ceil(sqrt(n)).
  std::size_t sample_size(std::size_t n) const {
    if (n == 0) return 0;
    std::size_t k;
    if (method == PivotMethod::median_of_three) {
      k = 3;
    } else {
      k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      while (k * k > n) --k;
      if (k * k < n) ++k;
    }
    k = std::min(k, n);
    if (k % 2 == 0) --k;
    return std::max<std::size_t>(k, 1);
  }
};

enum class FallbackSorter { mergesort, weak_heapsort };

inline double default_delta(std::size_t n) { return n < 2 ? 0.5 : 1.0 / std::log2(static_cast<double>(n)); }

struct GuardPolicy {
  double (*delta)(std::size_t) = &default_delta;
  FallbackSorter fallback = FallbackSorter::mergesort;
};

struct QuickConfig {
  PivotPolicy pivot{};
  BaseCase base = BaseCase::none();
  GuardPolicy guard{};
  /// Checks the whole array against the input multiset after every
  /// partition and every X phase. Needs operator< and operator== on T.
  bool verify_permutation = false;
};

struct RunInfo {
  std::size_t depth = 0;      // partitioning steps on the longest chain
  std::size_t fallbacks = 0;  // QuickXYsort only

  friend bool operator==(const RunInfo&, const RunInfo&) = default;
};

namespace detail {

template <class T, class Cmp>
std::size_t median3_index(std::span<T> s, std::size_t a, std::size_t b, std::size_t c, Cmp& cmp) {
  if (cmp.less(s[b], s[a])) std::swap(a, b);
  // s[a] <= s[b]
  if (!cmp.less(s[c], s[b])) return b;
  return cmp.less(s[c], s[a]) ? a : c;
}

// Lomuto scheme on s[lo, hi) with the pivot at s[lo]; returns its final slot.
template <class T, class Cmp>
std::size_t lomuto(std::span<T> s, std::size_t lo, std::size_t hi, Cmp& cmp) {
  std::size_t i = lo;
  for (std::size_t j = lo + 1; j < hi; ++j) {
    if (cmp.less(s[j], s[lo])) {
      ++i;
      if (i != j) cmp.swap(s[i], s[j]);
    }
  }
  if (i != lo) cmp.swap(s[lo], s[i]);
  return i;
}

}  // namespace detail

/// Places the t-th smallest of s at s[t] by quickselect with median-of-3
/// pivots; ranges of at most 3 elements are finished by binary Insertionsort.
template <class T, class Cmp>
void select_nth(std::span<T> s, std::size_t t, Cmp& cmp) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo > 3) {
    const std::size_t m = detail::median3_index(s, lo, lo + (hi - lo) / 2, hi - 1, cmp);
    if (m != lo) cmp.swap(s[lo], s[m]);
    const std::size_t i = detail::lomuto(s, lo, hi, cmp);
    if (i == t) return;
    if (t < i) {
      hi = i;
    } else {
      lo = i + 1;
    }
  }
  insertion_sort(s.subspan(lo, hi - lo), cmp);
}

/// Draws `sample` distinct positions uniformly (partial Fisher-Yates into the
/// front of seg) and returns the index of their median.
template <class T, class Cmp, class Rng>
std::size_t select_pivot(std::span<T> seg, std::size_t sample, Cmp& cmp, Rng& rng) {
  if (seg.empty()) throw std::invalid_argument("select_pivot: empty segment");
  sample = std::clamp<std::size_t>(sample, 1, seg.size());
  for (std::size_t i = 0; i < sample; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, seg.size() - i));
    if (j != i) cmp.swap(seg[i], seg[j]);
  }
  const std::size_t mid = sample / 2;
  select_nth(seg.first(sample), mid, cmp);
  return mid;
}

template <class T, class Cmp, class Rng>
std::size_t select_pivot(std::span<T> seg, const PivotPolicy& policy, Cmp& cmp, Rng& rng) {
  return select_pivot(seg, policy.sample_size(seg.size()), cmp, rng);
}

/// Moves the pivot to its final slot p: elements strictly less go left, the
/// rest right. Exactly |seg| - 1 comparisons.
template <class T, class Cmp>
std::size_t partition(std::span<T> seg, std::size_t pivot_index, Cmp& cmp) {
  if (pivot_index >= seg.size()) throw std::out_of_range("partition: pivot outside segment");
  if (pivot_index != 0) cmp.swap(seg[0], seg[pivot_index]);
  return detail::lomuto(seg, 0, seg.size(), cmp);
}

namespace detail {

enum class XSorter { merge, weak_heap };

template <class T>
class PermutationCheck {
 public:
  PermutationCheck(std::span<const T> a, bool enabled) : enabled_(enabled) {
    if (!enabled_) return;
    if constexpr (std::totally_ordered<T>) {
      reference_.assign(a.begin(), a.end());
      std::sort(reference_.begin(), reference_.end());
    } else {
      throw std::invalid_argument("verify_permutation needs a totally ordered element type");
    }
  }

  void operator()(std::span<const T> a, const char* phase) const {
    if (!enabled_) return;
    if constexpr (std::totally_ordered<T>) {
      std::vector<T> now(a.begin(), a.end());
      std::sort(now.begin(), now.end());
      if (now != reference_) throw InvariantViolation(std::string("array is no permutation of the input after ") + phase);
    }
  }

  void sorted(std::span<const T> part, const char* phase) const {
    if (!enabled_) return;
    if constexpr (std::totally_ordered<T>) {
      if (!std::is_sorted(part.begin(), part.end())) throw InvariantViolation(std::string("unsorted part after ") + phase);
    }
  }

 private:
  bool enabled_;
  std::vector<T> reference_;
};

template <class T, class Cmp>
void run_fallback(std::span<T> seg, const QuickConfig& cfg, Cmp& cmp) {
  if (cfg.guard.fallback == FallbackSorter::weak_heapsort) {
    weak_heap_sort(seg, cmp);
  } else {
    mergesort(seg, cfg.base, cmp);
  }
}

template <class T, class Cmp, class Rng>
RunInfo quick_x_sort(std::span<T> a, const QuickConfig& cfg, XSorter x, bool guarded, Cmp& cmp, Rng& rng) {
  RunInfo info;
  const PermutationCheck<T> check(a, cfg.verify_permutation);
  const std::size_t cutoff = std::max<std::size_t>(cfg.base.effective_threshold(), 3);
  std::size_t lo = 0;
  std::size_t hi = a.size();

  while (hi - lo > cutoff) {
    const std::size_t n = hi - lo;
    std::span<T> seg = a.subspan(lo, n);
    const std::size_t pivot = select_pivot(seg, cfg.pivot, cmp, rng);
    const std::size_t p = partition(seg, pivot, cmp);
    ++info.depth;
    check(a, "partition");

    if (guarded) {
      const double off = std::abs(static_cast<double>(p) - static_cast<double>(n) / 2.0);
      if (off > static_cast<double>(n) * cfg.guard.delta(n)) {
        run_fallback(seg, cfg, cmp);
        ++info.fallbacks;
        check(a, "fallback");
        check.sorted(seg, "fallback");
        return info;
      }
    }

    const std::size_t left = p;
    const std::size_t right = n - p - 1;
    std::span<T> lpart = seg.first(left);
    std::span<T> rpart = seg.subspan(p + 1);
    const bool left_smaller = left <= right;
    std::span<T> smaller = left_smaller ? lpart : rpart;
    std::span<T> larger = left_smaller ? rpart : lpart;

    bool sorted_left;
    if (x == XSorter::merge) {
      if (smaller.size() >= (larger.size() + 1) / 2) {
        mergesort_with_buffer(larger, smaller, cfg.base, cmp);
        sorted_left = !left_smaller;
      } else {
        mergesort_with_buffer(smaller, larger, cfg.base, cmp);
        sorted_left = left_smaller;
      }
    } else {
      // The smaller side is swapped next to the pivot inside the larger side,
      // heapified there and extracted into its own final slots.
      const std::size_t m = smaller.size();
      std::span<T> heap_region = left_smaller ? rpart.first(m) : lpart.last(m);
      for (std::size_t i = 0; i < m; ++i) cmp.swap(smaller[i], heap_region[i]);
      external_weak_heap_sort(heap_region, smaller, cmp);
      sorted_left = left_smaller;
    }
    check(a, "X phase");
    check.sorted(sorted_left ? lpart : rpart, "X phase");

    if (sorted_left) {
      lo += p + 1;
    } else {
      hi = lo + p;
    }
  }
  base_sort(a.subspan(lo, hi - lo), cfg.base, cmp);
  check(a, "base case");
  return info;
}

}  // namespace detail

template <class T, class Cmp, class Rng>
RunInfo quickmergesort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp, Rng& rng) {
  return detail::quick_x_sort(a, cfg, detail::XSorter::merge, false, cmp, rng);
}

template <class T, class Cmp>
RunInfo quickmergesort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp) {
  SplitMix64 rng(cfg.pivot.seed);
  return quickmergesort(a, cfg, cmp, rng);
}

template <class T, class Cmp, class Rng>
RunInfo quickweakheapsort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp, Rng& rng) {
  return detail::quick_x_sort(a, cfg, detail::XSorter::weak_heap, false, cmp, rng);
}

template <class T, class Cmp>
RunInfo quickweakheapsort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp) {
  SplitMix64 rng(cfg.pivot.seed);
  return quickweakheapsort(a, cfg, cmp, rng);
}

/// QuickMergesort that hands the whole remaining segment to the fallback
/// sorter once a split p misses n/2 by more than n * delta(n).
template <class T, class Cmp, class Rng>
RunInfo quickxysort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp, Rng& rng) {
  return detail::quick_x_sort(a, cfg, detail::XSorter::merge, true, cmp, rng);
}

template <class T, class Cmp>
RunInfo quickxysort(std::span<T> a, const QuickConfig& cfg, Cmp& cmp) {
  SplitMix64 rng(cfg.pivot.seed);
  return quickxysort(a, cfg, cmp, rng);
}

}  // namespace sortlab
