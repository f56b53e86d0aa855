#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sortlab/harness.hpp"

namespace sortlab {

namespace {

constexpr std::size_t exact_factorial_limit = 5000;

std::uint64_t ceil_log2_factorial_exact(std::size_t n) {
  std::vector<std::uint32_t> limbs{1};  // little endian, base 2^32
  for (std::uint64_t k = 2; k <= n; ++k) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      const std::uint64_t v = limb * k + carry;
      limb = static_cast<std::uint32_t>(v);
      carry = v >> 32;
    }
    if (carry != 0) limbs.push_back(static_cast<std::uint32_t>(carry));
  }
  const std::uint64_t bits = 32 * (limbs.size() - 1) + std::bit_width(limbs.back());
  bool power_of_two = std::has_single_bit(limbs.back());
  for (std::size_t i = 0; i + 1 < limbs.size() && power_of_two; ++i) power_of_two = limbs[i] == 0;
  return power_of_two ? bits - 1 : bits;
}

std::uint64_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

}  // namespace

std::uint64_t comparison_lower_bound(std::size_t n) {
  if (n <= exact_factorial_limit) return ceil_log2_factorial_exact(n);
  long double sum = 0;
  for (std::size_t k = 2; k <= n; ++k) sum += std::log2(static_cast<long double>(k));
  return static_cast<std::uint64_t>(std::ceil(sum));
}

std::uint64_t mergeinsertion_worst_case(std::size_t n) {
  // ceil(log2(3k/4)) = ceil(log2(3k)) - 2, clamped at 0 for k = 1
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t c = ceil_log2(3 * k);
    total += c >= 2 ? c - 2 : 0;
  }
  return total;
}

double insertionsort_average(std::size_t n) {
  // Inserting into k sorted elements is a balanced search over k + 1 slots;
  // its external path length is N floor(log2 N) + 2 (N - 2^floor(log2 N)).
  double total = 0;
  for (std::uint64_t k = 1; k < n; ++k) {
    const std::uint64_t slots = k + 1;
    const std::uint64_t q = std::bit_width(slots) - 1;
    const std::uint64_t path = slots * q + 2 * (slots - (std::uint64_t{1} << q));
    total += static_cast<double>(path) / static_cast<double>(slots);
  }
  return total;
}

}  // namespace sortlab
