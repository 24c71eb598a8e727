#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

inline constexpr std::size_t kDefaultMaxN = 10;
inline constexpr std::size_t kHardMaxN = 12;

struct EnumerationOptions {
  std::size_t shards = 1;       // worker threads; 0 = one per hardware thread
  std::size_t max_n = kDefaultMaxN;
  // Distinct codes a worker may hold before spilling a sorted run to disk.
  // 0 = unlimited. Only honoured when elements are not retained.
  std::size_t memory_cap = 0;
  std::filesystem::path spill_dir;  // empty = system temp directory
};

// Throws ResourceLimit if n exceeds options.max_n or max_n exceeds kHardMaxN.
void check_enumeration_bound(std::size_t n, const EnumerationOptions& options);

struct ImageReport {
  std::size_t n = 0;
  std::size_t t = 0;
  BigInt count;
  std::optional<std::vector<Permutation>> elements;  // lexicographic order
  std::size_t shards = 0;
  std::chrono::duration<double> wall_time{};
  std::size_t spilled_runs = 0;
};

/// s^t(S_n) by brute force over all n! permutations.
ImageReport image_of_iterate(std::size_t n, std::size_t t, bool keep_elements,
                             const EnumerationOptions& options = {});

/// Sorted packed codes of s^t(S_n) (see encode()).
std::vector<std::uint64_t> image_codes(std::size_t n, std::size_t t,
                                       const EnumerationOptions& options = {});

/// Sorted packed codes of the permutations of [n] with tail length >= min_tail
/// whose descent tops are all left-to-right maxima.
std::vector<std::uint64_t> characterized_codes(std::size_t n, std::size_t min_tail,
                                               const EnumerationOptions& options = {});

enum class DecisionRule { thm1, thm2_characterized, thm2_zeta, oracle_fallback };
std::string to_string(DecisionRule rule);

struct Membership {
  bool member = false;
  DecisionRule rule = DecisionRule::thm1;
};

/// Whether p (a permutation of [n]) lies in s^t(S_n). With m = n - t, the
/// closed-form rule decides when n >= 2m - 3; smaller n falls back to brute
/// force, which throws Undecidable when n is over the enumeration bound.
Membership characterize_membership(const Permutation& p, std::size_t t,
                                   const EnumerationOptions& options = {});

/// Number of p in S_n with s^t(p) increasing.
BigInt count_t_stack_sortable(std::size_t n, std::size_t t, const EnumerationOptions& options = {});

/// |Av_n(32-bar-4-1)|.
BigInt count_barred_avoiders(std::size_t n, const EnumerationOptions& options = {});

}  // namespace stacksort
