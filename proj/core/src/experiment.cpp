#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "sortlab/harness.hpp"
#include "sortlab/random.hpp"

namespace sortlab {

namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_schedule.empty()) throw std::invalid_argument("empty n schedule");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (cfg.dup_factor < 1) throw std::invalid_argument("dup factor must be at least 1");
  for (const std::size_t n : cfg.n_schedule) {
    if (n < 1) throw std::invalid_argument("sizes must be at least 1");
  }
}

void check_run(const ExperimentConfig& cfg, std::size_t n, std::size_t trial, std::span<const Key> out,
               const RunResult& r) {
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) ok = out[i] == static_cast<Key>(i / cfg.dup_factor);
  if (!ok) {
    throw InvariantViolation(std::string(algorithm_name(cfg.algorithm)) + ": wrong output at n=" + std::to_string(n) +
                             " trial=" + std::to_string(trial));
  }
  if (is_quick_variant(cfg.algorithm) && cfg.dup_factor == 1 && n >= 2) {
    const double limit = 8.0 * std::log2(static_cast<double>(n));
    if (static_cast<double>(r.info.depth) > limit) {
      throw InvariantViolation(std::string(algorithm_name(cfg.algorithm)) + ": partition depth " +
                               std::to_string(r.info.depth) + " exceeds 8 log2 n at n=" + std::to_string(n));
    }
  }
}

}  // namespace

std::vector<Key> make_input(std::size_t n, std::uint64_t seed, std::size_t trial, std::size_t dup_factor) {
  if (dup_factor < 1) dup_factor = 1;
  std::vector<Key> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Key>(i / dup_factor);
  SplitMix64 rng(derive_seed(seed, n, 2 * static_cast<std::uint64_t>(trial)));
  shuffle(std::span<Key>(v), rng);
  return v;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return derive_seed(seed, n, 2 * static_cast<std::uint64_t>(trial) + 1);
}

std::vector<RunResult> run_trials(const ExperimentConfig& cfg, std::size_t n) {
  validate(cfg);
  std::vector<RunResult> results(cfg.trials);
  AlgorithmOptions opt;
  opt.pivot = cfg.pivot;
  opt.base = cfg.base;

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < cfg.trials; t += stride) {
      std::vector<Key> data = make_input(n, cfg.seed, t, cfg.dup_factor);
      AlgorithmOptions local = opt;
      local.seed = trial_seed(cfg.seed, n, t);
      results[t] = run_algorithm(cfg.algorithm, data, local);
      check_run(cfg, n, t, data, results[t]);
    }
  };

  const std::size_t threads = std::min(cfg.threads, cfg.trials);
  if (threads <= 1) {
    work(0, 1);
    return results;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t k = 0; k < threads; ++k) {
    pool.emplace_back([&, k] {
      try {
        work(k, threads);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

ExperimentRecord summarize(std::string_view algorithm, std::size_t n, std::span<const RunResult> runs) {
  ExperimentRecord rec;
  rec.algorithm = std::string(algorithm);
  rec.n = n;
  rec.trials = runs.size();
  if (runs.empty()) return rec;

  uint128 sum = 0;
  uint128 sum_sq = 0;
  uint128 swaps = 0;
  long double ns = 0;
  for (const auto& r : runs) {
    sum += r.stats.comparisons;
    sum_sq += static_cast<uint128>(r.stats.comparisons) * r.stats.comparisons;
    swaps += r.stats.swaps;
    ns += static_cast<long double>(r.stats.elapsed.count());
  }
  const auto count = static_cast<long double>(runs.size());
  const long double mean = static_cast<long double>(sum) / count;
  rec.mean_comparisons = static_cast<double>(mean);
  if (runs.size() > 1) {
    // exact integer numerator: count * sum_sq - sum^2
    const auto num = static_cast<long double>(static_cast<uint128>(runs.size()) * sum_sq - sum * sum);
    rec.stddev_comparisons = static_cast<double>(std::sqrt(num / (count * (count - 1))));
  }
  rec.mean_kappa = kappa(rec.mean_comparisons, n);
  rec.mean_swaps = static_cast<double>(static_cast<long double>(swaps) / count);
  rec.mean_elapsed_ns = static_cast<double>(ns / count);
  return rec;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRecord> records;
  records.reserve(cfg.n_schedule.size());
  for (const std::size_t n : cfg.n_schedule) {
    const auto runs = run_trials(cfg, n);
    records.push_back(summarize(algorithm_name(cfg.algorithm), n, runs));
  }
  if (!cfg.output.empty()) write_csv_file(cfg.output, records);
  return records;
}

ExhaustiveStats exhaustive_stats(Algorithm a, std::size_t n, const AlgorithmOptions& opt) {
  if (n > exhaustive_limit) {
    throw std::invalid_argument("exhaustive enumeration is limited to n <= " + std::to_string(exhaustive_limit));
  }
  ExhaustiveStats st;
  st.n = n;
  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), Key{0});
  std::vector<Key> work(n);
  bool first = true;
  do {
    work = perm;
    const RunResult r = run_algorithm(a, work, opt);
    for (std::size_t i = 0; i < n; ++i) {
      if (work[i] != static_cast<Key>(i)) {
        throw InvariantViolation(std::string(algorithm_name(a)) + ": wrong output in exhaustive run");
      }
    }
    const std::uint64_t c = r.stats.comparisons;
    st.min = first ? c : std::min(st.min, c);
    st.max = first ? c : std::max(st.max, c);
    first = false;
    st.sum += c;
    ++st.count;
    ++st.histogram[c];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return st;
}

}  // namespace sortlab
