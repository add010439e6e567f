#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace editdiam::cli {

/// Comma-separated items: `N`, `2^K`, `A:B` (inclusive) and `A:B:xF`
/// (A, A*F, ... up to B). InputError on malformed text.
std::vector<std::size_t> parse_n_list(std::string_view text);

}  // namespace editdiam::cli
