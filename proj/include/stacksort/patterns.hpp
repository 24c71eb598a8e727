#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// A witness c, b, a (values decreasing) of the barred pattern 32-bar-4-1:
/// positions i1 < i2 < i3 with no entry larger than c strictly between b and a.
/// Positions are 1-based.
struct BarredOccurrence {
  std::array<std::size_t, 3> positions;
  std::array<Entry, 3> values;
  friend bool operator==(const BarredOccurrence&, const BarredOccurrence&) = default;
};

bool contains_231(const Permutation& p);

/// Some c with b, c, a an occurrence of 231 (b left of c left of a, a < b < c).
/// Returns the rightmost such c. Throws InvalidInput unless a, b are entries with a < b.
std::optional<Entry> exists_231_with_endpoints(const Permutation& p, Entry b, Entry a);

/// Lexicographically least (i1, i2, i3) witness, by direct search of the definition.
std::optional<BarredOccurrence> find_barred_3241(const Permutation& p);
bool avoids_barred_3241(const Permutation& p);

/// Re-checks every defining condition of a witness against p.
bool is_barred_occurrence(const Permutation& p, const BarredOccurrence& occ);

/// Linear-time test that every descent top is a left-to-right maximum, which
/// is equivalent to avoiding 32-bar-4-1.
template <class T>
bool descent_tops_are_lr_maxima(std::span<const T> p) {
  T best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
    } else if (p[i] > p[i + 1]) {
      return false;
    }
  }
  return true;
}
bool descent_tops_are_lr_maxima(const Permutation& p);

/// Witness with entry 1 in the last role, lexicographically least in (i1, i2).
/// Requires p standard (InvalidInput otherwise).
std::optional<BarredOccurrence> barred_occurrence_involving_min(const Permutation& p);

/// A partition of [n] into nonempty blocks. Stored canonically: blocks ordered
/// by their maxima, elements ascending within a block.
class SetPartition {
 public:
  SetPartition() = default;
  // Throws InvalidInput unless the blocks are nonempty, disjoint and cover [n].
  explicit SetPartition(std::vector<std::vector<Entry>> blocks);

  const std::vector<std::vector<Entry>>& blocks() const noexcept { return blocks_; }
  std::size_t ground_size() const noexcept { return ground_size_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<Entry>> blocks_;
  std::size_t ground_size_ = 0;
};

// `{2}{1,3}{4}`; the empty partition prints as the empty string.
std::string format_partition(const SetPartition& p);
SetPartition parse_partition(std::string_view text);

/// Cuts a 32-bar-4-1 avoider of [n] into blocks, each starting at a
/// left-to-right maximum and running up to the next one (the last block runs
/// to the end). Throws PreconditionError if p contains the pattern or is not standard.
SetPartition callan_partition(const Permutation& p);

/// Blocks by ascending maximum, each written as its maximum followed by the
/// rest ascending.
Permutation callan_inverse(const SetPartition& partition);

}  // namespace stacksort
