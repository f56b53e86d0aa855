#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "sortlab/harness.hpp"
#include "sortlab/random.hpp"
#include "sortlab/weak_heap.hpp"

namespace sortlab {

namespace {

enum class InputClass { random, sorted, reverse, all_equal, few_distinct };

constexpr InputClass input_classes[] = {InputClass::random, InputClass::sorted, InputClass::reverse,
                                        InputClass::all_equal, InputClass::few_distinct};

const char* class_name(InputClass c) {
  switch (c) {
    case InputClass::random: return "random";
    case InputClass::sorted: return "sorted";
    case InputClass::reverse: return "reverse";
    case InputClass::all_equal: return "all-equal";
    case InputClass::few_distinct: return "few-distinct";
  }
  return "?";
}

std::vector<Key> make_class_input(InputClass c, std::size_t n, std::uint64_t seed) {
  std::vector<Key> v(n);
  SplitMix64 rng(seed);
  switch (c) {
    case InputClass::random:
      std::iota(v.begin(), v.end(), Key{0});
      shuffle(std::span<Key>(v), rng);
      break;
    case InputClass::sorted:
      std::iota(v.begin(), v.end(), Key{0});
      break;
    case InputClass::reverse:
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Key>(n - 1 - i);
      break;
    case InputClass::all_equal:
      std::fill(v.begin(), v.end(), Key{7});
      break;
    case InputClass::few_distinct:
      for (auto& x : v) x = static_cast<Key>(uniform_below(rng, 4));
      break;
  }
  return v;
}

class Suite {
 public:
  explicit Suite(std::ostream* log) : log_(log) {}

  void check(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) {
      report_.failures.push_back(what);
      if (log_) *log_ << "FAIL " << what << '\n';
    }
  }

  void section(const char* name, const std::function<void()>& body) {
    const std::size_t before = report_.failures.size();
    try {
      body();
    } catch (const std::exception& e) {
      check(false, std::string(name) + ": " + e.what());
    }
    if (log_) *log_ << (report_.failures.size() == before ? "ok   " : "FAIL ") << name << '\n';
  }

  VerifyReport take() { return std::move(report_); }

 private:
  std::ostream* log_;
  VerifyReport report_;
};

void sorted_permutations(Suite& suite) {
  for (const Algorithm a : all_algorithms()) {
    for (const InputClass c : input_classes) {
      for (const std::size_t n : {0, 1, 2, 3, 17, 64, 1000}) {
        const std::vector<Key> input = make_class_input(c, n, 0x51ab + n);
        std::vector<Key> expected = input;
        std::sort(expected.begin(), expected.end());
        std::vector<Key> data = input;
        AlgorithmOptions opt;
        opt.seed = n;
        opt.verify_permutation = is_quick_variant(a);
        const std::string label =
            std::string(algorithm_name(a)) + " " + class_name(c) + " n=" + std::to_string(n);
        try {
          run_algorithm(a, data, opt);
          suite.check(data == expected, label + ": output is not the sorted input");
        } catch (const std::exception& e) {
          suite.check(false, label + ": " + e.what());
        }
      }
    }
  }
}

void weak_heap_invariants(Suite& suite) {
  for (std::size_t n = 1; n <= 512; ++n) {
    std::vector<Key> v = make_class_input(InputClass::random, n, n);
    Tally t;
    Counted<> cmp(t);
    WeakHeap<Key> h{std::span<Key>(v)};
    h.construct(cmp);
    suite.check(t.comparisons == n - 1, "construct n=" + std::to_string(n) + " used " +
                                            std::to_string(t.comparisons) + " comparisons");
    suite.check(h.is_weak_heap(), "construct n=" + std::to_string(n) + " violates the heap order");
  }
  for (const std::size_t n : {2, 5, 16, 33, 100}) {
    std::vector<Key> v = make_class_input(InputClass::random, n, 3 * n);
    Tally t;
    Counted<> cmp(t);
    bool ok = true;
    weak_heap_sort(std::span<Key>(v), cmp, [&](const WeakHeap<Key>& h, std::size_t size) {
      const auto s = h.elements();
      std::vector<Key> prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(size));
      WeakHeap<Key> view{std::span<Key>(prefix)};
      for (std::size_t j = 1; j < size; ++j) view.set_reverse_bit(j, h.reverse_bit(j));
      ok = ok && view.is_weak_heap(std::greater<>{});
    });
    suite.check(ok, "weak_heap_sort n=" + std::to_string(n) + " broke the heap order between rounds");
  }
}

void exhaustive_oracles(Suite& suite) {
  const auto ewhs = exhaustive_stats(Algorithm::external_weakheapsort, 4);
  const auto ms = exhaustive_stats(Algorithm::mergesort, 4);
  suite.check(ewhs.histogram == ms.histogram, "external weak heapsort and mergesort differ at n=4");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Algorithm a : {Algorithm::mergeinsertion, Algorithm::mergeinsertion_improved}) {
      const auto st = exhaustive_stats(a, n);
      suite.check(st.max == mergeinsertion_worst_case(n),
                  std::string(algorithm_name(a)) + " worst case at n=" + std::to_string(n));
    }
  }
  const auto ins = exhaustive_stats(Algorithm::insertionsort, 4);
  suite.check(ins.sum * 3 == ins.count * 14, "insertionsort mean at n=4 is not 14/3");
  suite.check(comparison_lower_bound(4) == 5 && comparison_lower_bound(21) == 66, "lower bound values");
}

}  // namespace

VerifyReport verify_all(std::ostream* log) {
  Suite suite(log);
  suite.section("sorted permutations", [&] { sorted_permutations(suite); });
  suite.section("weak heap invariants", [&] { weak_heap_invariants(suite); });
  suite.section("exhaustive oracles", [&] { exhaustive_oracles(suite); });
  return suite.take();
}

}  // namespace sortlab
