#include "stacksort/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stacksort/error.hpp"

namespace stacksort {

namespace {

void require_distinct_positive(std::span<const Entry> word) {
  std::vector<Entry> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() == 0) {
    throw InvalidInput("permutation entries must be positive");
  }
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvalidInput("duplicate entry " + std::to_string(*dup));
  }
}

}  // namespace

Permutation::Permutation(std::vector<Entry> entries) : entries_(std::move(entries)) {
  require_distinct_positive(entries_);
}

Permutation::Permutation(std::initializer_list<Entry> entries)
    : Permutation(std::vector<Entry>(entries)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Entry> v(n);
  std::iota(v.begin(), v.end(), Entry{1});
  return Permutation(Unchecked{}, std::move(v));
}

Entry Permutation::max_entry() const {
  if (entries_.empty()) throw InvalidInput("empty permutation has no maximum");
  return *std::max_element(entries_.begin(), entries_.end());
}

Entry Permutation::min_entry() const {
  if (entries_.empty()) throw InvalidInput("empty permutation has no minimum");
  return *std::min_element(entries_.begin(), entries_.end());
}

std::size_t Permutation::index_of(Entry value) const noexcept {
  return static_cast<std::size_t>(std::find(entries_.begin(), entries_.end(), value) -
                                  entries_.begin());
}

bool Permutation::is_standard() const noexcept {
  // Entries are distinct and positive, so every entry <= n forces {1..n}.
  const auto n = entries_.size();
  return std::all_of(entries_.begin(), entries_.end(), [n](Entry e) { return e <= n; });
}

bool Permutation::is_increasing() const noexcept {
  return std::is_sorted(entries_.begin(), entries_.end());
}

Permutation standardize(std::span<const Entry> word) {
  require_distinct_positive(word);
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<Entry> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[order[rank]] = static_cast<Entry>(rank + 1);
  }
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

Permutation del_min(const Permutation& p) {
  if (p.empty()) throw InvalidInput("del_min of the empty permutation");
  std::vector<Entry> out(p.begin(), p.end());
  out.erase(std::min_element(out.begin(), out.end()));
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

std::vector<std::size_t> descents(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(i + 1);
  }
  return out;
}

EntrySet descent_tops(const Permutation& p) {
  EntrySet out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.insert(p[i]);
  }
  return out;
}

EntrySet lr_maxima(const Permutation& p) {
  EntrySet out;
  Entry best = 0;
  for (Entry e : p) {
    if (e > best) {
      out.insert(e);
      best = e;
    }
  }
  return out;
}

std::size_t tail_length(const Permutation& p) {
  if (!p.is_standard()) {
    throw InvalidInput("tail length is defined only for permutations of [n]");
  }
  std::size_t len = 0;
  for (std::size_t i = p.size(); i > 0 && p[i - 1] == i; --i) ++len;
  return len;
}

}  // namespace stacksort
