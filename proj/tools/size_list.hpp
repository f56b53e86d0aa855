#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace sortlab::cli {

// Comma-separated items, each one of
//   1000       a size
//   2^14       a power of two
//   a..b       a, 2a, 4a, ... up to b
//   a..b:s     a, a+s, a+2s, ... up to b
// Throws std::invalid_argument on anything else.
std::vector<std::size_t> parse_sizes(std::string_view text);

}  // namespace sortlab::cli
