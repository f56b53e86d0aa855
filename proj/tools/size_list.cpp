#include "size_list.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace sortlab::cli {

namespace {

[[noreturn]] void bad(std::string_view item) {
  throw std::invalid_argument("bad size '" + std::string(item) + "'");
}

std::size_t number(std::string_view s, std::string_view item) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) bad(item);
  return v;
}

std::size_t size_value(std::string_view s, std::string_view item) {
  const std::size_t caret = s.find('^');
  if (caret == std::string_view::npos) return number(s, item);
  const std::size_t base = number(s.substr(0, caret), item);
  const std::size_t exp = number(s.substr(caret + 1), item);
  if (base != 2 || exp > 40) bad(item);
  return std::size_t{1} << exp;
}

void expand(std::string_view item, std::vector<std::size_t>& out) {
  const std::size_t dots = item.find("..");
  if (dots == std::string_view::npos) {
    out.push_back(size_value(item, item));
    return;
  }
  const std::size_t lo = size_value(item.substr(0, dots), item);
  std::string_view rest = item.substr(dots + 2);
  const std::size_t colon = rest.find(':');
  const std::size_t hi = size_value(rest.substr(0, colon), item);
  if (lo == 0 || lo > hi) bad(item);
  if (colon == std::string_view::npos) {
    for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
    return;
  }
  const std::size_t step = number(rest.substr(colon + 1), item);
  if (step == 0) bad(item);
  for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    expand(text.substr(start, comma - start), out);
    start = comma + 1;
  }
  return out;
}

}  // namespace sortlab::cli
