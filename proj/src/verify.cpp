#include "stacksort/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "stacksort/bell.hpp"
#include "stacksort/constructions.hpp"
#include "stacksort/enumerate.hpp"
#include "stacksort/error.hpp"
#include "stacksort/patterns.hpp"

namespace stacksort {

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::theorem1: return "theorem1";
    case Claim::theorem2: return "theorem2";
    case Claim::prop2: return "prop2";
    case Claim::thm3_count: return "thm3_count";
    case Claim::catalan: return "catalan";
    case Claim::west_zeilberger: return "west_zeilberger";
  }
  return "unknown";
}

std::optional<Claim> parse_claim(std::string_view name) {
  for (Claim c : {Claim::theorem1, Claim::theorem2, Claim::prop2, Claim::thm3_count,
                  Claim::catalan, Claim::west_zeilberger}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

const BigInt& ImageCountCache::count(std::size_t n, std::size_t t) {
  const auto key = std::make_pair(n, t);
  auto it = counts_.find(key);
  if (it == counts_.end()) {
    it = counts_.emplace(key, image_of_iterate(n, t, false, options_).count).first;
  }
  return it->second;
}

namespace {

std::size_t symmetric_difference_size(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  std::size_t count = 0;
  struct CountingIt {
    std::size_t* c;
    using iterator_category = std::output_iterator_tag;
    using value_type = void;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = void;
    CountingIt& operator*() { return *this; }
    CountingIt& operator=(std::uint64_t) {
      ++*c;
      return *this;
    }
    CountingIt& operator++() { return *this; }
    CountingIt operator++(int) { return *this; }
  };
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), CountingIt{&count});
  return count;
}

std::uint64_t code_of(const Permutation& p) {
  std::vector<Small> small(p.begin(), p.end());
  return encode(small);
}

void finish(VerificationReport& r) {
  r.pass = r.expected == r.observed && r.mismatches == 0;
}

}  // namespace

VerificationReport verify_theorem1(std::size_t m, std::size_t n,
                                   const EnumerationOptions& options) {
  if (m < 1 || n < m || n + 2 < 2 * m) {
    throw PreconditionError("theorem1 needs m >= 1 and n >= max(m, 2m-2)");
  }
  check_enumeration_bound(n, options);
  VerificationReport r;
  r.claim = Claim::theorem1;
  r.parameters = {{"m", m}, {"n", n}};
  r.expected = bell(m);
  const auto image = image_codes(n, n - m, options);
  const auto predicted = characterized_codes(n, n - m, options);
  r.observed = image.size();
  r.mismatches = symmetric_difference_size(image, predicted);
  r.detail = "image vs characterization: " + std::to_string(r.mismatches) + " mismatches";
  finish(r);
  return r;
}

VerificationReport verify_theorem2(std::size_t m, const EnumerationOptions& options) {
  if (m < 3) throw PreconditionError("theorem2 needs m >= 3");
  const std::size_t n = 2 * m - 3;
  check_enumeration_bound(n, options);
  VerificationReport r;
  r.claim = Claim::theorem2;
  r.parameters = {{"m", m}, {"n", n}};
  r.expected = bell(m) + m - 2;

  const auto image = image_codes(n, m - 3, options);
  auto predicted = characterized_codes(n, m - 3, options);
  std::vector<std::uint64_t> zetas;
  for (std::size_t l = 3; l <= m; ++l) zetas.push_back(code_of(zeta(l, m)));
  std::sort(zetas.begin(), zetas.end());
  predicted.insert(predicted.end(), zetas.begin(), zetas.end());
  std::sort(predicted.begin(), predicted.end());
  predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());

  std::vector<std::uint64_t> containing;
  for (auto code : image) {
    if (!avoids_barred_3241(decode_permutation(code, n))) containing.push_back(code);
  }

  r.observed = image.size();
  const std::size_t set_mismatch = symmetric_difference_size(image, predicted);
  const std::size_t zeta_mismatch = symmetric_difference_size(containing, zetas);
  r.mismatches = set_mismatch + zeta_mismatch;
  r.detail = "image vs characterization+zeta: " + std::to_string(set_mismatch) +
             " mismatches; pattern-containing image elements vs zeta family: " +
             std::to_string(zeta_mismatch) + " mismatches";
  finish(r);
  return r;
}

VerificationReport verify_prop2(std::size_t m, std::size_t n_max, ImageCountCache& cache) {
  if (m < 1 || n_max < m) throw PreconditionError("prop2 needs 1 <= m <= n_max");
  check_enumeration_bound(n_max, cache.options());
  VerificationReport r;
  r.claim = Claim::prop2;
  r.parameters = {{"m", m}, {"n_max", n_max}};
  for (std::size_t n = m; n <= n_max; ++n) r.series.emplace_back(n, cache.count(n, n - m));

  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (ok) {
      ++passed;
    } else {
      failures.push_back(what);
    }
  };

  const BigInt bm = bell(m);
  check(r.series.front().second == factorial(m), "first term != m!");
  for (std::size_t i = 0; i + 1 < r.series.size(); ++i) {
    check(r.series[i].second >= r.series[i + 1].second,
          "increase at n=" + std::to_string(r.series[i].first));
  }
  for (const auto& [n, c] : r.series) {
    if (n + 2 >= 2 * m) check(c == bm, "n=" + std::to_string(n) + " != B_m");
    if (m >= 3 && n + 3 <= 2 * m) {
      check(c >= bm + m - 2, "n=" + std::to_string(n) + " below B_m+m-2");
    }
  }
  r.expected = checks;
  r.observed = passed;

  std::string chain;
  for (const auto& [n, c] : r.series) {
    if (!chain.empty()) chain += ' ';
    chain += c.str();
  }
  r.detail = "chain " + chain;
  for (const auto& f : failures) r.detail += "; " + f;
  finish(r);
  return r;
}

VerificationReport verify_prop2(std::size_t m, std::size_t n_max,
                                const EnumerationOptions& options) {
  ImageCountCache cache(options);
  return verify_prop2(m, n_max, cache);
}

VerificationReport verify_thm3_count(std::size_t n, const EnumerationOptions& options) {
  VerificationReport r;
  r.claim = Claim::thm3_count;
  r.parameters = {{"n", n}};
  r.expected = bell(n);
  r.observed = count_barred_avoiders(n, options);
  finish(r);
  return r;
}

VerificationReport verify_catalan(std::size_t n, const EnumerationOptions& options) {
  VerificationReport r;
  r.claim = Claim::catalan;
  r.parameters = {{"n", n}, {"t", 1}};
  r.expected = catalan(n);
  r.observed = count_t_stack_sortable(n, 1, options);
  finish(r);
  return r;
}

VerificationReport verify_west_zeilberger(std::size_t n, const EnumerationOptions& options) {
  if (n < 1) throw PreconditionError("west_zeilberger needs n >= 1");
  VerificationReport r;
  r.claim = Claim::west_zeilberger;
  r.parameters = {{"n", n}, {"t", 2}};
  r.expected = two_stack_sortable_formula(n);
  r.observed = count_t_stack_sortable(n, 2, options);
  finish(r);
  return r;
}

std::vector<VerificationReport> verify_all(std::size_t max_n, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.max_n = max_n;
  check_enumeration_bound(max_n, opts);

  std::vector<VerificationReport> out;
  for (std::size_t m = 1; m <= max_n; ++m) {
    for (std::size_t n = std::max(m, 2 * m >= 2 ? 2 * m - 2 : 0); n <= max_n; ++n) {
      out.push_back(verify_theorem1(m, n, opts));
    }
  }
  for (std::size_t m = 3; 2 * m - 3 <= max_n; ++m) out.push_back(verify_theorem2(m, opts));
  ImageCountCache cache(opts);
  for (std::size_t m = 1; m <= max_n; ++m) out.push_back(verify_prop2(m, max_n, cache));
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(verify_thm3_count(n, opts));
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(verify_catalan(n, opts));
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(verify_west_zeilberger(n, opts));
  return out;
}

std::vector<ExploreRow> explore_open(std::size_t m, const EnumerationOptions& options) {
  if (m < 1) throw PreconditionError("explore needs m >= 1");
  const std::size_t last = std::max(m, 2 * m - 2);
  check_enumeration_bound(last, options);
  const BigInt bm = bell(m);
  std::vector<ExploreRow> rows;
  for (std::size_t n = m; n <= last; ++n) {
    ExploreRow row;
    row.n = n;
    row.count = image_of_iterate(n, n - m, false, options).count;
    if (n == m) {
      row.expected = factorial(m);
      row.label = "m!";
    } else if (m >= 3 && n == 2 * m - 3) {
      row.expected = bm + m - 2;
      row.label = "B_m+m-2";
    } else if (n + 2 >= 2 * m) {
      row.expected = bm;
      row.label = "B_m";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stacksort
