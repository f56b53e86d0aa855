#include <array>
#include <chrono>

#include "sortlab/harness.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/merge.hpp"
#include "sortlab/merge_insertion.hpp"
#include "sortlab/quickxsort.hpp"
#include "sortlab/weak_heap.hpp"

namespace sortlab {

namespace {

constexpr std::array<Algorithm, 10> algorithms = {
    Algorithm::weakheapsort,   Algorithm::external_weakheapsort, Algorithm::mergesort,
    Algorithm::insertionsort,  Algorithm::mergeinsertion,        Algorithm::mergeinsertion_improved,
    Algorithm::quickmergesort, Algorithm::quickmergesort_mi,     Algorithm::quickweakheapsort,
    Algorithm::quickxysort,
};

constexpr std::array<std::string_view, 10> names = {
    "weakheapsort",   "external_weakheapsort", "mergesort",         "insertionsort",
    "mergeinsertion", "mergeinsertion_improved", "quickmergesort", "quickmergesort_mi",
    "quickweakheapsort", "quickxysort",
};

constexpr std::size_t default_insertion_base = 9;

BaseCase resolve_base(Algorithm a, std::size_t n, const BaseSpec& requested) {
  if (requested.grow) return BaseCase::growing(n);
  switch (a) {
    case Algorithm::quickmergesort_mi:
      return requested.threshold ? BaseCase::merge_insertion(*requested.threshold) : BaseCase::growing(n);
    case Algorithm::quickmergesort:
    case Algorithm::quickxysort:
      return BaseCase::insertion(requested.threshold.value_or(default_insertion_base));
    default:
      return requested.threshold ? BaseCase::insertion(*requested.threshold) : BaseCase::none();
  }
}

}  // namespace

std::span<const Algorithm> all_algorithms() { return algorithms; }

std::string_view algorithm_name(Algorithm a) { return names[static_cast<std::size_t>(a)]; }

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return algorithms[i];
  }
  return std::nullopt;
}

bool is_quick_variant(Algorithm a) {
  return a == Algorithm::quickmergesort || a == Algorithm::quickmergesort_mi ||
         a == Algorithm::quickweakheapsort || a == Algorithm::quickxysort;
}

QuickConfig quick_config(Algorithm a, std::size_t n, const AlgorithmOptions& opt) {
  QuickConfig cfg;
  cfg.pivot.method = opt.pivot;
  cfg.pivot.seed = opt.seed;
  cfg.base = resolve_base(a, n, opt.base);
  cfg.guard.fallback = opt.fallback;
  cfg.verify_permutation = opt.verify_permutation;
  return cfg;
}

RunResult run_algorithm(Algorithm a, std::span<Key> data, const AlgorithmOptions& opt) {
  Tally tally;
  Counted<> cmp(tally);
  RunInfo info;
  const std::size_t n = data.size();
  const auto start = std::chrono::steady_clock::now();
  switch (a) {
    case Algorithm::weakheapsort:
      weak_heap_sort(data, cmp);
      break;
    case Algorithm::external_weakheapsort:
      external_weak_heap_sort(data, cmp);
      break;
    case Algorithm::mergesort:
      mergesort(data, resolve_base(a, n, opt.base), cmp);
      break;
    case Algorithm::insertionsort:
      insertion_sort(data, cmp);
      break;
    case Algorithm::mergeinsertion:
      merge_insertion_sort(data, MergeInsertionVariant::basic, cmp);
      break;
    case Algorithm::mergeinsertion_improved:
      merge_insertion_sort(data, MergeInsertionVariant::improved, cmp);
      break;
    case Algorithm::quickmergesort:
    case Algorithm::quickmergesort_mi:
      info = quickmergesort(data, quick_config(a, n, opt), cmp);
      break;
    case Algorithm::quickweakheapsort:
      info = quickweakheapsort(data, quick_config(a, n, opt), cmp);
      break;
    case Algorithm::quickxysort:
      info = quickxysort(data, quick_config(a, n, opt), cmp);
      break;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {make_stats(n, tally, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)), info};
}

}  // namespace sortlab
