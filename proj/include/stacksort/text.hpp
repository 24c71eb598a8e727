#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stacksort/permutation.hpp"

namespace stacksort {

inline constexpr std::size_t kDefaultMaxLength = 20;

/// Accepts either a contiguous digit string (`4162`, one entry per digit) or
/// integers separated by spaces and/or commas (`4 1 6 2`, `10,3,7`).
/// Throws ParseError citing the 1-based character position of the problem.
Permutation parse_permutation(std::string_view text, std::size_t max_length = kDefaultMaxLength);

// Space-separated; a digit string when `compact` and every entry is a single digit.
std::string format_permutation(const Permutation& p, bool compact = false);

// `{1,4,6}`
std::string format_entry_set(const EntrySet& s);

}  // namespace stacksort
