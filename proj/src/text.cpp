#include "stacksort/text.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "stacksort/error.hpp"

namespace stacksort {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ','; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Token {
  Entry value;
  std::size_t position;  // 1-based
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t max_length) {
  std::size_t first = 0;
  while (first < text.size() && (is_separator(text[first]) || text[first] == '\n')) ++first;
  std::size_t last = text.size();
  while (last > first && (is_separator(text[last - 1]) || text[last - 1] == '\n')) --last;

  const bool separated =
      std::any_of(text.begin() + first, text.begin() + last, is_separator);

  std::vector<Token> tokens;
  if (separated) {
    std::size_t i = first;
    while (i < last) {
      if (is_separator(text[i])) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < last && !is_separator(text[i])) {
        if (!is_digit(text[i])) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i + 1);
        ++i;
      }
      Entry value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc{}) throw ParseError("entry out of range", start + 1);
      if (value == 0) throw ParseError("entries must be positive", start + 1);
      tokens.push_back({value, start + 1});
    }
  } else {
    for (std::size_t i = first; i < last; ++i) {
      if (!is_digit(text[i])) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i + 1);
      if (text[i] == '0') throw ParseError("entries must be positive", i + 1);
      tokens.push_back({static_cast<Entry>(text[i] - '0'), i + 1});
    }
  }

  if (tokens.size() > max_length) {
    throw ParseError("permutation longer than " + std::to_string(max_length) + " entries",
                     tokens[max_length].position);
  }
  std::unordered_map<Entry, std::size_t> seen;
  std::vector<Entry> entries;
  entries.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!seen.emplace(t.value, t.position).second) {
      throw ParseError("duplicate entry " + std::to_string(t.value), t.position);
    }
    entries.push_back(t.value);
  }
  return Permutation(std::move(entries));
}

std::string format_permutation(const Permutation& p, bool compact) {
  const bool digits = compact && p.size() <= 9 &&
                      std::all_of(p.begin(), p.end(), [](Entry e) { return e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && !digits) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string format_entry_set(const EntrySet& s) {
  std::string out = "{";
  bool first = true;
  for (Entry e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace stacksort
