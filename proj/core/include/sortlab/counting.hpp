#pragma once

// Comparison and swap instrumentation shared by every sorter in the library.
//
// Sorters never call operator< on elements directly. They receive a counting
// comparator (anything modelling CountingComparator) and route every order
// query through `less` and every element exchange through `swap`. The tally
// owned by the caller therefore holds the exact cost of one sort invocation.

#include <chrono>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

namespace sortlab {

/// Mutable counters for a single sort invocation. Not shared between threads.
struct Tally {
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;

  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Per-run record. `kappa` is the linear-term constant of
/// comparisons = n log2 n + kappa n.
struct SortStats {
  std::size_t n = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::chrono::nanoseconds elapsed{0};
  double kappa = 0.0;
};

/// (comparisons - n log2 n) / n. Returns 0 for n == 1; throws
/// std::invalid_argument for n == 0.
double kappa(double comparisons, std::size_t n);

SortStats make_stats(std::size_t n, const Tally& tally, std::chrono::nanoseconds elapsed);

/// Counting wrapper around a strict weak ordering.
template <class Less = std::less<>>
class Counted {
 public:
  explicit Counted(Tally& tally, Less less = {}) : less_(std::move(less)), tally_(&tally) {}

  template <class T, class U>
  bool less(const T& a, const U& b) {
    ++tally_->comparisons;
    return std::invoke(less_, a, b);
  }

  // One order query, one count, regardless of how many calls the underlying
  // predicate needs to produce a three-way answer.
  template <class T, class U>
  std::weak_ordering compare(const T& a, const U& b) {
    ++tally_->comparisons;
    if (std::invoke(less_, a, b)) return std::weak_ordering::less;
    if (std::invoke(less_, b, a)) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  template <class T>
  void swap(T& a, T& b) {
    ++tally_->swaps;
    using std::swap;
    swap(a, b);
  }

  /// Records `k` element exchanges performed in bulk (e.g. by std::rotate).
  void add_swaps(std::uint64_t k) { tally_->swaps += k; }

  Tally& tally() { return *tally_; }
  const Less& predicate() const { return less_; }

 private:
  Less less_;
  Tally* tally_;
};

/// Flips the order of a counting comparator. Used to turn min-oriented
/// structures (weak heaps) into max-oriented ones without touching their code.
template <class Cmp>
class Reversed {
 public:
  explicit Reversed(Cmp& base) : base_(&base) {}

  template <class T, class U>
  bool less(const T& a, const U& b) {
    return base_->less(b, a);
  }
  template <class T>
  void swap(T& a, T& b) {
    base_->swap(a, b);
  }
  void add_swaps(std::uint64_t k) { base_->add_swaps(k); }

 private:
  Cmp* base_;
};

template <class C, class T>
concept CountingComparator = requires(C& c, T& a, const T& ca) {
  { c.less(ca, ca) } -> std::convertible_to<bool>;
  c.swap(a, a);
  c.add_swaps(std::uint64_t{1});
};

/// Single instrumented three-way comparison.
template <class T, class Less = std::less<>>
std::weak_ordering counted_compare(const T& a, const T& b, Tally& tally, Less less = {}) {
  Counted<Less> cmp(tally, std::move(less));
  return cmp.compare(a, b);
}

}  // namespace sortlab
