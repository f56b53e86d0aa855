#pragma once

// Array-embedded weak heaps.
//
// Node i has left child 2i + r_i, right child 2i + 1 - r_i and parent i / 2.
// The root (index 0) keeps r_0 = 0, so its only child is node 1. Every node is
// ordered before everything in its right subtree (half-tree ordering); there
// is no relation with the left subtree.
//
// The heap is min-oriented under the comparator it is handed. Max-oriented
// uses pass a Reversed<> comparator.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sortlab/counting.hpp"

namespace sortlab {

template <class T>
class WeakHeap {
 public:
  /// Views `elements`; the heap does not own them. `with_active` allocates
  /// the per-node active bits used by ExternalWeakHeapsort.
  explicit WeakHeap(std::span<T> elements, bool with_active = false)
      : s_(elements), reverse_(elements.size(), false) {
    if (with_active) active_.assign(elements.size(), true);
  }

  std::size_t size() const { return s_.size(); }
  std::span<T> elements() { return s_; }
  std::span<const T> elements() const { return s_; }

  bool reverse_bit(std::size_t i) const { return reverse_[i]; }
  void set_reverse_bit(std::size_t i, bool value) {
    if (i == 0 && value) throw std::invalid_argument("WeakHeap: the root has no left child");
    reverse_[i] = value;
  }

  std::size_t left_child(std::size_t i) const { return 2 * i + (reverse_[i] ? 1 : 0); }
  std::size_t right_child(std::size_t i) const { return 2 * i + 1 - (reverse_[i] ? 1 : 0); }
  static std::size_t parent(std::size_t i) { return i / 2; }

  bool has_active_bits() const { return !active_.empty(); }
  bool active(std::size_t i) const { return active_.empty() || active_[i]; }
  void deactivate(std::size_t i) { active_.at(i) = false; }

  /// Ascends while j is a left child and returns the parent reached from a
  /// right child. Uses no element comparisons.
  std::size_t d_ancestor(std::size_t j) const {
    if (j == 0 || j >= size()) throw std::out_of_range("d_ancestor: index must be in [1, n)");
    while ((j & 1U) == (reverse_[j / 2] ? 1U : 0U)) j /= 2;
    return j / 2;
  }

  /// Bottommost node below i's right child, following left children whose
  /// index stays below `bound`. These are exactly the nodes whose
  /// distinguished ancestor is i. Returns `bound` if i has no right child
  /// below the bound.
  std::size_t d_child(std::size_t i, std::size_t bound) const {
    std::size_t x = right_child(i);
    if (x >= bound || x == i) return bound;
    for (std::size_t y = left_child(x); y < bound; y = left_child(x)) x = y;
    return x;
  }

  /// One comparison. If s_j < s_i the elements are exchanged and r_j is
  /// flipped. Returns true when a swap happened.
  template <class Cmp>
  bool join(std::size_t i, std::size_t j, Cmp& cmp) {
    if (i == j) throw std::invalid_argument("join: i and j must differ");
    if (cmp.less(s_[j], s_[i])) {
      cmp.swap(s_[i], s_[j]);
      reverse_[j] = !reverse_[j];
      return true;
    }
    return false;
  }

  /// Bottom-up construction with exactly n - 1 comparisons.
  template <class Cmp>
  void construct(Cmp& cmp) {
    for (std::size_t j = size(); j-- > 1;) join(d_ancestor(j), j, cmp);
  }

  /// Full scan of the half-tree ordering over active nodes. Uncounted; meant
  /// for tests and debug checks.
  template <class Less = std::less<>>
  bool is_weak_heap(Less less = {}) const {
    for (std::size_t j = 1; j < size(); ++j) {
      if (!active(j)) continue;
      if (less(s_[j], s_[d_ancestor(j)])) return false;
    }
    return true;
  }

 private:
  std::span<T> s_;
  std::vector<bool> reverse_;
  std::vector<bool> active_;
};

/// Dutton's in-place WeakHeapsort. A max-oriented weak heap is built and the
/// root is repeatedly exchanged with the last heap slot, then the heap is
/// repaired along the special path with one join per level.
///
/// `after_round(heap, heap_size)` is invoked after construction and after
/// every extraction; tests use it to check the ordering invariant.
template <class T, class Cmp, class Observer>
void weak_heap_sort(std::span<T> a, Cmp& cmp, Observer&& after_round) {
  const std::size_t n = a.size();
  if (n < 2) return;
  Reversed<Cmp> max_cmp(cmp);
  WeakHeap<T> heap(a);
  heap.construct(max_cmp);
  after_round(std::as_const(heap), n);
  for (std::size_t i = n - 1; i > 0; --i) {
    cmp.swap(a[0], a[i]);
    if (i >= 2) {
      std::size_t x = 1;
      for (std::size_t y = heap.left_child(x); y < i; y = heap.left_child(x)) x = y;
      for (; x > 0; x /= 2) heap.join(0, x, max_cmp);
    }
    after_round(std::as_const(heap), i);
  }
}

template <class T, class Cmp>
void weak_heap_sort(std::span<T> a, Cmp& cmp) {
  weak_heap_sort(a, cmp, [](const WeakHeap<T>&, std::size_t) {});
}

/// ExternalWeakHeapsort over a heap region and a disjoint output area.
///
/// Each round exchanges the root with the next output slot, so the element
/// previously in that slot (a dummy when embedded in QuickWeakHeapsort)
/// enters the heap as the hole. The hole travels down the special path to a
/// node without an active left child, where it either continues into that
/// node's right subtree or the node is deactivated. The special path above
/// the hole is then re-joined bottom-up with the root.
template <class T, class Cmp>
class ExternalWeakHeapSorter {
 public:
  ExternalWeakHeapSorter(std::span<T> heap_region, std::span<T> out, Cmp& cmp)
      : heap_(heap_region, true), out_(out), cmp_(&cmp) {
    if (out.size() < heap_region.size()) {
      throw std::invalid_argument("external_weak_heap_sort: output area too small");
    }
  }

  void construct() { heap_.construct(*cmp_); }

  /// Moves the current minimum to out[next] and restores the heap.
  void extract() {
    cmp_->swap(heap_.elements()[0], out_[next_++]);
    fill_hole(0);
  }

  bool empty() const { return next_ == heap_.size(); }
  const WeakHeap<T>& heap() const { return heap_; }

  void run() {
    if (heap_.size() == 0) return;
    construct();
    while (!empty()) extract();
  }

 private:
  void fill_hole(std::size_t root) {
    const std::size_t n = heap_.size();
    const std::size_t c = heap_.right_child(root);
    if (c == root || c >= n || !heap_.active(c)) {
      heap_.deactivate(root);
      return;
    }
    std::size_t y = c;
    for (std::size_t l = heap_.left_child(y); l < n && heap_.active(l); l = heap_.left_child(y)) {
      y = l;
    }
    auto s = heap_.elements();
    cmp_->swap(s[root], s[y]);
    fill_hole(y);
    for (std::size_t z = y; z != c;) {
      z /= 2;
      heap_.join(root, z, *cmp_);
    }
  }

  WeakHeap<T> heap_;
  std::span<T> out_;
  Cmp* cmp_;
  std::size_t next_ = 0;
};

template <class T, class Cmp>
void external_weak_heap_sort(std::span<T> heap_region, std::span<T> out, Cmp& cmp) {
  ExternalWeakHeapSorter<T, Cmp>(heap_region, out, cmp).run();
}

/// Standalone ExternalWeakHeapsort: sorts `a` through a heap-allocated output
/// area of n slots and swaps the result back.
template <class T, class Cmp>
void external_weak_heap_sort(std::span<T> a, Cmp& cmp) {
  if (a.size() < 2) return;
  std::vector<T> out(a.begin(), a.end());
  external_weak_heap_sort(a, std::span<T>(out), cmp);
  std::swap_ranges(out.begin(), out.end(), a.begin());
  cmp.add_swaps(a.size());
}

}  // namespace sortlab
