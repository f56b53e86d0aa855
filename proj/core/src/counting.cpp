#include "sortlab/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace sortlab {

double kappa(double comparisons, std::size_t n) {
  if (n == 0) throw std::invalid_argument("kappa: n must be at least 1");
  if (n == 1) return 0.0;
  const double dn = static_cast<double>(n);
  return (comparisons - dn * std::log2(dn)) / dn;
}

SortStats make_stats(std::size_t n, const Tally& tally, std::chrono::nanoseconds elapsed) {
  SortStats s;
  s.n = n;
  s.comparisons = tally.comparisons;
  s.swaps = tally.swaps;
  s.elapsed = elapsed;
  s.kappa = n == 0 ? 0.0 : kappa(static_cast<double>(tally.comparisons), n);
  return s;
}

}  // namespace sortlab
