#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/lab.hpp"

namespace stacksort {

enum class Claim { theorem1, theorem2, prop2, thm3_count, catalan, west_zeilberger };
std::string to_string(Claim claim);
std::optional<Claim> parse_claim(std::string_view name);

struct VerificationReport {
  Claim claim = Claim::theorem1;
  std::vector<std::pair<std::string, std::size_t>> parameters;
  BigInt expected;
  BigInt observed;
  // Elements where the brute-force image and the predicted set disagree.
  std::size_t mismatches = 0;
  bool pass = false;  // expected == observed && mismatches == 0
  // (n, |s^(n-m)(S_n)|) chain for prop2; empty otherwise.
  std::vector<std::pair<std::size_t, BigInt>> series;
  std::string detail;
};

/// Memo of |s^t(S_n)| shared by the verification routines within one run.
class ImageCountCache {
 public:
  explicit ImageCountCache(EnumerationOptions options) : options_(std::move(options)) {}
  const BigInt& count(std::size_t n, std::size_t t);
  const EnumerationOptions& options() const noexcept { return options_; }

 private:
  EnumerationOptions options_;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> counts_;
};

/// |s^(n-m)(S_n)| = B_m and the image equals {tl >= n-m, avoids 32-bar-4-1}.
/// Requires m >= 1 and n >= max(m, 2m-2).
VerificationReport verify_theorem1(std::size_t m, std::size_t n,
                                   const EnumerationOptions& options = {});

/// |s^(m-3)(S_(2m-3))| = B_m + m - 2, the image equals the characterized set
/// plus the zeta family, and the zeta members are exactly the image elements
/// containing 32-bar-4-1. Requires m >= 3.
VerificationReport verify_theorem2(std::size_t m, const EnumerationOptions& options = {});

/// The chain (|s^(n-m)(S_n)|) for m <= n <= n_max is nonincreasing, starts at
/// m!, sits at B_m from n = 2m-2 on, and is at least B_m + m - 2 on
/// m <= n <= 2m-3. expected/observed count the individual checks.
VerificationReport verify_prop2(std::size_t m, std::size_t n_max, ImageCountCache& cache);
VerificationReport verify_prop2(std::size_t m, std::size_t n_max,
                                const EnumerationOptions& options = {});

VerificationReport verify_thm3_count(std::size_t n, const EnumerationOptions& options = {});
VerificationReport verify_catalan(std::size_t n, const EnumerationOptions& options = {});
VerificationReport verify_west_zeilberger(std::size_t n, const EnumerationOptions& options = {});

/// Every claim at every parameter whose enumeration stays within max_n.
std::vector<VerificationReport> verify_all(std::size_t max_n, const EnumerationOptions& options);

struct ExploreRow {
  std::size_t n = 0;
  BigInt count;
  std::optional<BigInt> expected;  // set where a closed form is known
  std::string label;               // "m!", "B_m+m-2", "B_m" or empty
};

/// |s^(n-m)(S_n)| for m <= n <= max(m, 2m-2).
std::vector<ExploreRow> explore_open(std::size_t m, const EnumerationOptions& options = {});

}  // namespace stacksort
