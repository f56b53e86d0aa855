// sortlab command line: randomized benchmarks, exhaustive enumeration and the
// invariant suite.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "size_list.hpp"
#include "sortlab/harness.hpp"

namespace {

constexpr int exit_config = 1;
constexpr int exit_invariant = 2;

std::vector<std::string> algorithm_names() {
  std::vector<std::string> out;
  for (const auto a : sortlab::all_algorithms()) out.emplace_back(sortlab::algorithm_name(a));
  return out;
}

sortlab::Algorithm to_algorithm(const std::string& name) {
  const auto a = sortlab::parse_algorithm(name);
  if (!a) throw std::invalid_argument("unknown algorithm '" + name + "'");
  return *a;
}

sortlab::BaseSpec to_base(const std::string& text) {
  sortlab::BaseSpec base;
  if (text.empty()) return base;
  if (text == "grow") {
    base.grow = true;
    return base;
  }
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size() || v == 0) throw std::invalid_argument(text);
    base.threshold = v;
  } catch (const std::exception&) {
    throw std::invalid_argument("--base expects a positive integer or 'grow', got '" + text + "'");
  }
  return base;
}

void print_records(const std::vector<sortlab::ExperimentRecord>& records) {
  sortlab::write_csv(std::cout, records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparison-counting sort benchmarks and oracles"};
  app.require_subcommand(1);

  std::string algo;
  std::string sizes;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string pivot = "sqrt";
  std::string base;
  std::string csv;
  std::size_t threads = 1;
  std::size_t dup_factor = 1;

  auto* bench = app.add_subcommand("bench", "Mean comparison counts over random permutations");
  bench->add_option("--algo", algo, "Algorithm id")->required()->check(CLI::IsMember(algorithm_names()));
  bench->add_option("--n", sizes, "Sizes: 1000, 2^14, 256..65536 (doubling) or 100..1000:100")->required();
  bench->add_option("--trials", trials, "Trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--pivot", pivot, "Pivot sampling")->check(CLI::IsMember({"sqrt", "median3"}));
  bench->add_option("--base", base, "Base case threshold or 'grow'");
  bench->add_option("--csv", csv, "Also write the records to this file");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--dup-factor", dup_factor, "Each key occurs this many times")->check(CLI::PositiveNumber);

  std::size_t exhaustive_n = 0;
  auto* exhaustive = app.add_subcommand("exhaustive", "Comparison statistics over all n! inputs");
  exhaustive->add_option("--algo", algo, "Algorithm id")->required()->check(CLI::IsMember(algorithm_names()));
  exhaustive->add_option("--n", exhaustive_n, "Size, at most 10")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_config;
  }

  try {
    if (*bench) {
      sortlab::ExperimentConfig cfg;
      cfg.algorithm = to_algorithm(algo);
      cfg.n_schedule = sortlab::cli::parse_sizes(sizes);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.pivot = pivot == "median3" ? sortlab::PivotMethod::median_of_three : sortlab::PivotMethod::sqrt_sample;
      cfg.base = to_base(base);
      cfg.output = csv;
      cfg.threads = threads;
      cfg.dup_factor = dup_factor;
      print_records(sortlab::run_experiment(cfg));
    } else if (*exhaustive) {
      const auto st = sortlab::exhaustive_stats(to_algorithm(algo), exhaustive_n);
      std::cout << "algo=" << algo << " n=" << st.n << " inputs=" << st.count << " min=" << st.min
                << " max=" << st.max << " sum=" << st.sum << " mean=" << st.mean() << '\n';
      std::cout << "comparisons,inputs\n";
      for (const auto& [c, k] : st.histogram) std::cout << c << ',' << k << '\n';
    } else if (*verify) {
      const auto report = sortlab::verify_all(&std::cout);
      std::cout << report.checks << " checks, " << report.failures.size() << " failures\n";
      return report.ok() ? 0 : exit_invariant;
    }
  } catch (const sortlab::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  }
  return 0;
}
