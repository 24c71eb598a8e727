#include "stacksort/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "stacksort/error.hpp"

namespace stacksort {

bool contains_231(const Permutation& p) {
  // For each middle entry c, pair the largest smaller entry to its left (b)
  // with the smallest entry to its right (a).
  const std::size_t n = p.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    std::optional<Entry> b;
    for (std::size_t i = 0; i < j; ++i) {
      if (p[i] < p[j] && (!b || p[i] > *b)) b = p[i];
    }
    if (!b) continue;
    const Entry a = *std::min_element(p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
    if (a < *b) return true;
  }
  return false;
}

std::optional<Entry> exists_231_with_endpoints(const Permutation& p, Entry b, Entry a) {
  const std::size_t pb = p.index_of(b);
  const std::size_t pa = p.index_of(a);
  if (pb == p.size() || pa == p.size()) throw InvalidInput("endpoint is not an entry of the permutation");
  if (a >= b) throw InvalidInput("231 endpoints need a < b");
  if (pb > pa) return std::nullopt;
  for (std::size_t j = pa; j-- > pb + 1;) {
    if (p[j] > b) return p[j];
  }
  return std::nullopt;
}

namespace {

BarredOccurrence make_occurrence(const Permutation& p, std::size_t i1, std::size_t i2,
                                 std::size_t i3) {
  return {{i1 + 1, i2 + 1, i3 + 1}, {p[i1], p[i2], p[i3]}};
}

}  // namespace

std::optional<BarredOccurrence> find_barred_3241(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      if (p[i2] > p[i1]) continue;
      for (std::size_t i3 = i2 + 1; i3 < n; ++i3) {
        if (p[i3] > p[i1]) break;  // would sit between i2 and every later i3
        if (p[i3] < p[i2]) return make_occurrence(p, i1, i2, i3);
      }
    }
  }
  return std::nullopt;
}

bool avoids_barred_3241(const Permutation& p) { return !find_barred_3241(p).has_value(); }

bool is_barred_occurrence(const Permutation& p, const BarredOccurrence& occ) {
  const auto [i1, i2, i3] = occ.positions;
  if (!(1 <= i1 && i1 < i2 && i2 < i3 && i3 <= p.size())) return false;
  if (p[i1 - 1] != occ.values[0] || p[i2 - 1] != occ.values[1] || p[i3 - 1] != occ.values[2]) {
    return false;
  }
  if (!(occ.values[0] > occ.values[1] && occ.values[1] > occ.values[2])) return false;
  for (std::size_t j = i2 + 1; j < i3; ++j) {
    if (p[j - 1] > occ.values[0]) return false;
  }
  return true;
}

bool descent_tops_are_lr_maxima(const Permutation& p) {
  return descent_tops_are_lr_maxima<Entry>(p.entries());
}

std::optional<BarredOccurrence> barred_occurrence_involving_min(const Permutation& p) {
  if (!p.is_standard()) throw InvalidInput("expected a permutation of [n]");
  const std::size_t i3 = p.index_of(1);
  if (i3 >= p.size()) return std::nullopt;
  for (std::size_t i1 = 0; i1 < i3; ++i1) {
    // Any entry larger than p[i1] in (i2, i3) rules out i2, so i2 must come at
    // or after the last such entry.
    std::size_t last_big = i1;
    for (std::size_t j = i1 + 1; j < i3; ++j) {
      if (p[j] > p[i1]) last_big = j;
    }
    for (std::size_t i2 = std::max(last_big, i1 + 1); i2 < i3; ++i2) {
      if (p[i2] < p[i1]) return make_occurrence(p, i1, i2, i3);
    }
  }
  return std::nullopt;
}

SetPartition::SetPartition(std::vector<std::vector<Entry>> blocks) {
  std::size_t n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidInput("set partition has an empty block");
    std::sort(b.begin(), b.end());
    n += b.size();
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& b : blocks) {
    for (Entry e : b) {
      if (e == 0 || e > n) throw InvalidInput("set partition element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
      if (seen[e]) throw InvalidInput("set partition element " + std::to_string(e) + " repeated");
      seen[e] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.back() < y.back(); });
  blocks_ = std::move(blocks);
  ground_size_ = n;
}

std::string format_partition(const SetPartition& p) {
  std::string out;
  for (const auto& b : p.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

SetPartition parse_partition(std::string_view text) {
  std::vector<std::vector<Entry>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, i + 1); };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw fail("expected '{'");
    ++i;
    std::vector<Entry> block;
    skip_ws();
    while (true) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) {
        i = start;
        throw fail("expected a positive integer");
      }
      Entry v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
      if (ec != std::errc{} || v == 0) {
        i = start;
        throw fail("expected a positive integer");
      }
      block.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw fail("expected ',' or '}'");
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  return SetPartition(std::move(blocks));
}

SetPartition callan_partition(const Permutation& p) {
  if (!p.is_standard()) throw PreconditionError("callan_partition expects a permutation of [n]");
  if (!descent_tops_are_lr_maxima(p)) {
    throw PreconditionError("callan_partition: permutation contains 32-bar-4-1");
  }
  std::vector<std::vector<Entry>> blocks;
  Entry best = 0;
  for (Entry e : p) {
    if (e > best) {
      blocks.emplace_back();
      best = e;
    }
    blocks.back().push_back(e);
  }
  return SetPartition(std::move(blocks));
}

Permutation callan_inverse(const SetPartition& partition) {
  std::vector<Entry> out;
  out.reserve(partition.ground_size());
  for (const auto& b : partition.blocks()) {
    out.push_back(b.back());
    out.insert(out.end(), b.begin(), b.end() - 1);
  }
  return Permutation(std::move(out));
}

}  // namespace stacksort
