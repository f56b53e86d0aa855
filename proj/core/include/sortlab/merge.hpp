#pragma once

// Top-down Mergesort whose temporary space is a region holding foreign
// ("dummy") elements. Every data movement is a swap, so segment plus buffer
// always hold a permutation of their initial contents.
//
// Sorting a segment of length n in place needs ceil(n/2) buffer slots:
//   1. the right half (ceil(n/2)) is sorted into the buffer,
//   2. the left half (floor(n/2)) is sorted into the tail of the segment,
//   3. both runs are merged back to the front of the segment.
// "Sorted into" recursively sorts both halves of the source in place, using
// the destination as their buffer, and then merges them into the destination.
// The merge tree is the usual floor/ceil split of top-down Mergesort.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sortlab/counting.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/merge_insertion.hpp"

namespace sortlab {

/// Sorter used for segments of at most `threshold` elements.
struct BaseCase {
  enum class Kind { none, insertion, merge_insertion };

  Kind kind = Kind::none;
  std::size_t threshold = 1;
  MergeInsertionVariant variant = MergeInsertionVariant::improved;

  static BaseCase none() { return {}; }
  static BaseCase insertion(std::size_t threshold) { return {Kind::insertion, threshold}; }
  static BaseCase merge_insertion(std::size_t threshold,
                                  MergeInsertionVariant v = MergeInsertionVariant::improved) {
    return {Kind::merge_insertion, threshold, v};
  }
  /// MergeInsertion with threshold floor(40 log10 n).
  static BaseCase growing(std::size_t n) {
    const double t = n < 2 ? 1.0 : std::floor(40.0 * std::log10(static_cast<double>(n)));
    return merge_insertion(std::max<std::size_t>(1, static_cast<std::size_t>(t)));
  }

  std::size_t effective_threshold() const { return kind == Kind::none ? 1 : std::max<std::size_t>(1, threshold); }
};

template <class T, class Cmp>
void base_sort(std::span<T> a, const BaseCase& base, Cmp& cmp) {
  if (a.size() < 2) return;
  switch (base.kind) {
    case BaseCase::Kind::merge_insertion:
      merge_insertion_sort(a, base.variant, cmp);
      break;
    case BaseCase::Kind::none:
    case BaseCase::Kind::insertion:
      insertion_sort(a, cmp);
      break;
  }
}

namespace detail {

// Merges sorted runs a[0, la) and b[0, lb) into out[0, la + lb) by swaps.
// out is either disjoint from both runs or ends exactly where one run ends,
// with the other run outside; the write position then never passes the read
// position of the overlapping run. Ties take from a.
template <class T, class Cmp>
void swap_merge(T* a, std::size_t la, T* b, std::size_t lb, T* out, Cmp& cmp) {
  T* const a_end = a + la;
  T* const b_end = b + lb;
  while (a != a_end && b != b_end) {
    if (cmp.less(*b, *a)) {
      cmp.swap(*out++, *b++);
    } else {
      cmp.swap(*out++, *a++);
    }
  }
  for (; a != a_end; ++a, ++out) {
    if (out != a) cmp.swap(*out, *a);
  }
  for (; b != b_end; ++b, ++out) {
    if (out != b) cmp.swap(*out, *b);
  }
}

template <class T, class Cmp>
void sort_in_place(T* p, std::size_t n, T* buf, const BaseCase& base, Cmp& cmp);

// Sorts src[0, n) into dst[0, n); dst holds dummies and is disjoint from src.
template <class T, class Cmp>
void sort_into(T* src, std::size_t n, T* dst, const BaseCase& base, Cmp& cmp) {
  if (n <= base.effective_threshold()) {
    base_sort(std::span<T>(src, n), base, cmp);
    for (std::size_t i = 0; i < n; ++i) cmp.swap(src[i], dst[i]);
    return;
  }
  const std::size_t left = n / 2;
  const std::size_t right = n - left;
  sort_in_place(src, left, dst, base, cmp);
  sort_in_place(src + left, right, dst, base, cmp);
  swap_merge(src, left, src + left, right, dst, cmp);
}

template <class T, class Cmp>
void sort_in_place(T* p, std::size_t n, T* buf, const BaseCase& base, Cmp& cmp) {
  if (n <= base.effective_threshold()) {
    base_sort(std::span<T>(p, n), base, cmp);
    return;
  }
  const std::size_t left = n / 2;
  const std::size_t right = n - left;
  sort_into(p + left, right, buf, base, cmp);
  sort_into(p, left, p + right, base, cmp);
  swap_merge(p + right, left, buf, right, p, cmp);
}

}  // namespace detail

/// Sorts `seg` using `buf` (disjoint, at least ceil(|seg| / 2) slots) as
/// swap space. `buf` ends up holding its original elements in some order.
template <class T, class Cmp>
void mergesort_with_buffer(std::span<T> seg, std::span<T> buf, const BaseCase& base, Cmp& cmp) {
  if (seg.size() > base.effective_threshold() && buf.size() < (seg.size() + 1) / 2) {
    throw std::invalid_argument("mergesort: buffer smaller than half the segment");
  }
  detail::sort_in_place(seg.data(), seg.size(), buf.data(), base, cmp);
}

/// A segment [lo, hi) of `data` with a swap buffer [buf_lo, buf_hi) in the
/// same array.
template <class T>
struct BufferedSegment {
  std::span<T> data;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t buf_lo = 0;
  std::size_t buf_hi = 0;
  BaseCase base{};

  std::span<T> segment() const { return data.subspan(lo, hi - lo); }
  std::span<T> buffer() const { return data.subspan(buf_lo, buf_hi - buf_lo); }

  void validate(std::size_t needed) const {
    if (lo > hi || hi > data.size() || buf_lo > buf_hi || buf_hi > data.size()) {
      throw std::out_of_range("BufferedSegment: bounds outside the array");
    }
    if (buf_lo < hi && lo < buf_hi && buf_lo != buf_hi) {
      throw std::invalid_argument("BufferedSegment: buffer overlaps the segment");
    }
    if (buf_hi - buf_lo < needed) {
      throw std::invalid_argument("BufferedSegment: buffer too small");
    }
  }
};

/// Merges the sorted runs [lo, mid) and [mid, hi): the left run is swapped
/// out into the buffer and merged back to the original place. At most
/// (hi - lo) - 1 comparisons.
template <class T, class Cmp>
void merge_with_buffer(const BufferedSegment<T>& seg, std::size_t mid, Cmp& cmp) {
  if (mid < seg.lo || mid > seg.hi) throw std::out_of_range("merge_with_buffer: mid outside segment");
  const std::size_t left = mid - seg.lo;
  seg.validate(left);
  if (left == 0 || mid == seg.hi) return;
  T* const base = seg.data.data();
  T* const buf = base + seg.buf_lo;
  for (std::size_t i = 0; i < left; ++i) cmp.swap(base[seg.lo + i], buf[i]);
  detail::swap_merge(buf, left, base + mid, seg.hi - mid, base + seg.lo, cmp);
}

template <class T, class Cmp>
void mergesort_external(const BufferedSegment<T>& seg, Cmp& cmp) {
  const std::size_t n = seg.hi - seg.lo;
  seg.validate(n > seg.base.effective_threshold() ? (n + 1) / 2 : 0);
  detail::sort_in_place(seg.data.data() + seg.lo, n, seg.data.data() + seg.buf_lo, seg.base, cmp);
}

/// Plain external Mergesort with a heap-allocated buffer of ceil(n/2) slots.
template <class T, class Cmp>
void mergesort(std::span<T> a, const BaseCase& base, Cmp& cmp) {
  if (a.size() < 2) return;
  std::vector<T> buf(a.begin(), a.begin() + static_cast<std::ptrdiff_t>((a.size() + 1) / 2));
  mergesort_with_buffer(a, std::span<T>(buf), base, cmp);
}

}  // namespace sortlab
