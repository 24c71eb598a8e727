#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace stacksort {

using Entry = std::uint32_t;

// A set of entry values (left-to-right maxima, descent tops, ...).
using EntrySet = std::set<Entry>;

/// An ordering of a finite set of distinct positive integers in one-line
/// notation. Need not be a permutation of [n]; see is_standard().
///
/// Storage is 0-based; the free functions below report positions 1-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput on a zero or repeated entry.
  explicit Permutation(std::vector<Entry> entries);
  Permutation(std::initializer_list<Entry> entries);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // 0-based access.
  Entry operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Entry max_entry() const;
  Entry min_entry() const;

  // 0-based index of `value`, or size() if absent.
  std::size_t index_of(Entry value) const noexcept;
  bool contains(Entry value) const noexcept { return index_of(value) != size(); }

  // Entry set is exactly {1, ..., n}.
  bool is_standard() const noexcept;
  bool is_increasing() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Entry> entries) : entries_(std::move(entries)) {}
  friend Permutation standardize(std::span<const Entry>);
  friend Permutation del_min(const Permutation&);

  std::vector<Entry> entries_;
};

/// Replace the i-th smallest entry by i. Throws InvalidInput on duplicates or zero.
Permutation standardize(std::span<const Entry> word);
inline Permutation standardize(const Permutation& p) { return standardize(p.entries()); }

/// Delete the smallest entry. Throws InvalidInput on the empty permutation.
Permutation del_min(const Permutation& p);

// 1-based indices i with p_i > p_{i+1}.
std::vector<std::size_t> descents(const Permutation& p);
EntrySet descent_tops(const Permutation& p);
EntrySet lr_maxima(const Permutation& p);

/// Largest l such that the last l positions are fixed points.
/// Requires p to be standard (InvalidInput otherwise); the empty permutation has tail length 0.
std::size_t tail_length(const Permutation& p);

}  // namespace stacksort
