#pragma once

// Experiment driver: algorithm registry, randomized and exhaustive comparison
// statistics, reference bounds and CSV records.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sortlab/counting.hpp"
#include "sortlab/quickxsort.hpp"

namespace sortlab {

using Key = std::uint32_t;

// ---- bounds ---------------------------------------------------------------

/// ceil(log2 n!), the information-theoretic worst-case lower bound.
std::uint64_t comparison_lower_bound(std::size_t n);

/// F(n) = sum_{k=1..n} ceil(log2(3k/4)), the worst case of MergeInsertion.
std::uint64_t mergeinsertion_worst_case(std::size_t n);

/// Exact mean comparisons of binary Insertionsort over all n! inputs, as a
/// double: sum over k = 1..n-1 of the expected cost of inserting into k.
double insertionsort_average(std::size_t n);

// ---- algorithms -----------------------------------------------------------

enum class Algorithm {
  weakheapsort,
  external_weakheapsort,
  mergesort,
  insertionsort,
  mergeinsertion,
  mergeinsertion_improved,
  quickmergesort,
  quickmergesort_mi,
  quickweakheapsort,
  quickxysort,
};

std::span<const Algorithm> all_algorithms();
std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool is_quick_variant(Algorithm a);

/// Base case for the algorithms that take one. An unset threshold selects the
/// algorithm default: threshold 1 for mergesort and quickweakheapsort,
/// Insertionsort up to 9 for quickmergesort and quickxysort, MergeInsertion
/// up to floor(40 log10 n) for quickmergesort_mi.
struct BaseSpec {
  std::optional<std::size_t> threshold;
  bool grow = false;  // MergeInsertion up to floor(40 log10 n)

  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

struct AlgorithmOptions {
  PivotMethod pivot = PivotMethod::sqrt_sample;
  BaseSpec base{};
  std::uint64_t seed = 0;
  bool verify_permutation = false;
  FallbackSorter fallback = FallbackSorter::mergesort;
};

/// The QuickConfig an algorithm id resolves to for inputs of size n.
QuickConfig quick_config(Algorithm a, std::size_t n, const AlgorithmOptions& opt);

struct RunResult {
  SortStats stats;
  RunInfo info;
};

/// Sorts `data` with a fresh tally and reports its cost.
RunResult run_algorithm(Algorithm a, std::span<Key> data, const AlgorithmOptions& opt = {});

// ---- experiments ----------------------------------------------------------

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::quickmergesort;
  std::vector<std::size_t> n_schedule;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  PivotMethod pivot = PivotMethod::sqrt_sample;
  BaseSpec base{};
  std::string output;        // CSV path, empty for none
  std::size_t threads = 1;
  std::size_t dup_factor = 1;  // every key occurs dup_factor times
};

struct ExperimentRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_comparisons = 0;
  double stddev_comparisons = 0;
  double mean_kappa = 0;
  double mean_swaps = 0;
  double mean_elapsed_ns = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Random input of size n for a given trial: a shuffled permutation of
/// 0..n-1, or of the keys i / dup_factor.
std::vector<Key> make_input(std::size_t n, std::uint64_t seed, std::size_t trial, std::size_t dup_factor = 1);

/// Seed handed to the algorithm for a trial; independent of the input stream.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial);

/// Per-trial results in trial order, for one n.
std::vector<RunResult> run_trials(const ExperimentConfig& cfg, std::size_t n);

ExperimentRecord summarize(std::string_view algorithm, std::size_t n, std::span<const RunResult> runs);

/// Throws std::invalid_argument on a bad config, InvariantViolation when a
/// run returns unsorted output or recurses suspiciously deep, and
/// std::runtime_error when the CSV cannot be written.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

struct ExhaustiveStats {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // comparisons -> inputs

  double mean() const { return count == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(count); }
};

constexpr std::size_t exhaustive_limit = 10;

/// Runs the algorithm on every permutation of 0..n-1. n <= 10.
ExhaustiveStats exhaustive_stats(Algorithm a, std::size_t n, const AlgorithmOptions& opt = {});

// ---- csv ------------------------------------------------------------------

inline constexpr std::string_view csv_header = "algo,n,trials,mean_cmps,stddev_cmps,kappa,mean_swaps,mean_ns";

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
void write_csv_file(const std::string& path, std::span<const ExperimentRecord> records);
/// Throws std::runtime_error on malformed input.
std::vector<ExperimentRecord> read_csv(std::istream& in);

// ---- invariant suite ------------------------------------------------------

struct VerifyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Sortedness and permutation checks for every algorithm over the standard
/// input classes, debug-mode QuickXsort runs, weak-heap construction counts
/// and small exhaustive oracles. Progress lines go to `log` when non-null.
VerifyReport verify_all(std::ostream* log = nullptr);

}  // namespace sortlab
