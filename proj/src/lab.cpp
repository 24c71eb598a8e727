#include "stacksort/lab.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <queue>
#include <random>
#include <unordered_set>

#include "stacksort/constructions.hpp"
#include "stacksort/enumerate.hpp"
#include "stacksort/error.hpp"
#include "stacksort/patterns.hpp"
#include "stacksort/stack_sort.hpp"

namespace stacksort {

void check_enumeration_bound(std::size_t n, const EnumerationOptions& options) {
  if (options.max_n > kHardMaxN) {
    throw ResourceLimit("max-n " + std::to_string(options.max_n) + " exceeds the hard cap of " +
                        std::to_string(kHardMaxN));
  }
  if (n > options.max_n) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(options.max_n) + " (raise it with --max-n, up to " +
                        std::to_string(kHardMaxN) + ")");
  }
}

namespace {

using Buffer = std::array<Small, kMaxPackedLength>;

// Applies s up to t times to `perm`, returning a view of the result in `a` or `b`.
std::span<const Small> iterate_small(std::span<const Small> perm, std::size_t t, Buffer& a,
                                     Buffer& b, Buffer& stack) {
  const std::size_t n = perm.size();
  std::copy(perm.begin(), perm.end(), a.begin());
  Small* cur = a.data();
  Small* next = b.data();
  for (std::size_t i = 0; i < t; ++i) {
    if (std::is_sorted(cur, cur + n)) break;
    stack_sort_into<Small>({cur, n}, {next, n}, {stack.data(), n});
    std::swap(cur, next);
  }
  return {cur, n};
}

std::size_t tail_length_small(std::span<const Small> p) {
  std::size_t len = 0;
  for (std::size_t i = p.size(); i > 0 && p[i - 1] == i; --i) ++len;
  return len;
}

// Scratch directory for spilled runs, removed with its contents on destruction.
class SpillDirectory {
 public:
  explicit SpillDirectory(const std::filesystem::path& base) {
    const auto root = base.empty() ? std::filesystem::temp_directory_path() : base;
    std::random_device rd;
    for (int attempt = 0;; ++attempt) {
      path_ = root / ("stacksort-spill-" + std::to_string(rd()));
      if (std::filesystem::create_directories(path_)) break;
      if (attempt > 16) throw Error("cannot create spill directory under " + root.string());
    }
  }
  ~SpillDirectory() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  SpillDirectory(const SpillDirectory&) = delete;
  SpillDirectory& operator=(const SpillDirectory&) = delete;

  std::filesystem::path next_file() {
    return path_ / ("run-" + std::to_string(counter_.fetch_add(1)) + ".bin");
  }

 private:
  std::filesystem::path path_;
  std::atomic<std::size_t> counter_{0};
};

class CodeCollector {
 public:
  CodeCollector(std::size_t cap, SpillDirectory* spill) : cap_(cap), spill_(spill) {}

  void add(std::uint64_t code) {
    codes_.insert(code);
    if (spill_ != nullptr && cap_ > 0 && codes_.size() >= cap_) flush();
  }

  std::vector<std::uint64_t> sorted_codes() const {
    std::vector<std::uint64_t> v(codes_.begin(), codes_.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  const std::vector<std::filesystem::path>& runs() const noexcept { return runs_; }

 private:
  void flush() {
    const auto v = sorted_codes();
    const auto path = spill_->next_file();
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(std::uint64_t)));
    if (!out) throw Error("failed writing spill file " + path.string());
    runs_.push_back(path);
    codes_.clear();
  }

  std::unordered_set<std::uint64_t> codes_;
  std::vector<std::filesystem::path> runs_;
  std::size_t cap_;
  SpillDirectory* spill_;
};

std::vector<std::uint64_t> merge_in_memory(const std::vector<CodeCollector>& parts) {
  std::vector<std::uint64_t> all;
  for (const auto& p : parts) {
    auto v = p.sorted_codes();
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// Distinct count across spilled runs and in-memory remainders by k-way merge.
std::uint64_t count_distinct_with_runs(const std::vector<CodeCollector>& parts) {
  struct Source {
    std::ifstream file;
    std::vector<std::uint64_t> memory;
    std::size_t pos = 0;
    bool from_file = false;
    bool next(std::uint64_t& out) {
      if (from_file) {
        return static_cast<bool>(file.read(reinterpret_cast<char*>(&out), sizeof(out)));
      }
      if (pos == memory.size()) return false;
      out = memory[pos++];
      return true;
    }
  };
  std::vector<Source> sources;
  for (const auto& p : parts) {
    for (const auto& run : p.runs()) {
      Source s;
      s.file.open(run, std::ios::binary);
      if (!s.file) throw Error("cannot reopen spill file " + run.string());
      s.from_file = true;
      sources.push_back(std::move(s));
    }
    Source s;
    s.memory = p.sorted_codes();
    sources.push_back(std::move(s));
  }

  using Head = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::uint64_t v;
    if (sources[i].next(v)) heap.emplace(v, i);
  }
  std::uint64_t count = 0;
  std::optional<std::uint64_t> last;
  while (!heap.empty()) {
    const auto [v, i] = heap.top();
    heap.pop();
    if (!last || *last != v) {
      ++count;
      last = v;
    }
    std::uint64_t nv;
    if (sources[i].next(nv)) heap.emplace(nv, i);
  }
  return count;
}

template <class Visit>
std::vector<CodeCollector> collect_codes(std::size_t n, const EnumerationOptions& options,
                                         SpillDirectory* spill, Visit visit) {
  return run_sharded<CodeCollector>(
      n, resolve_workers(options.shards),
      [&] { return CodeCollector(options.memory_cap, spill); }, visit);
}

struct Counter {
  std::uint64_t value = 0;
};

template <class Pred>
BigInt count_matching(std::size_t n, const EnumerationOptions& options, Pred pred) {
  check_enumeration_bound(n, options);
  auto parts = run_sharded<Counter>(n, resolve_workers(options.shards), [] { return Counter{}; },
                                    [&](Counter& c, std::span<const Small> p) {
                                      if (pred(p)) ++c.value;
                                    });
  BigInt total = 0;
  for (const auto& c : parts) total += c.value;
  return total;
}

}  // namespace

ImageReport image_of_iterate(std::size_t n, std::size_t t, bool keep_elements,
                             const EnumerationOptions& options) {
  check_enumeration_bound(n, options);
  const auto start = std::chrono::steady_clock::now();

  std::optional<SpillDirectory> spill;
  if (!keep_elements && options.memory_cap > 0) spill.emplace(options.spill_dir);

  auto parts = collect_codes(n, options, spill ? &*spill : nullptr,
                             [t](CodeCollector& c, std::span<const Small> p) {
                               Buffer a, b, stack;
                               c.add(encode(iterate_small(p, t, a, b, stack)));
                             });

  ImageReport report;
  report.n = n;
  report.t = t;
  report.shards = resolve_workers(options.shards);
  for (const auto& p : parts) report.spilled_runs += p.runs().size();

  if (report.spilled_runs > 0) {
    report.count = count_distinct_with_runs(parts);
  } else {
    const auto codes = merge_in_memory(parts);
    report.count = codes.size();
    if (keep_elements) {
      std::vector<Permutation> elements;
      elements.reserve(codes.size());
      for (auto code : codes) elements.push_back(decode_permutation(code, n));
      report.elements = std::move(elements);
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<std::uint64_t> image_codes(std::size_t n, std::size_t t,
                                       const EnumerationOptions& options) {
  check_enumeration_bound(n, options);
  return merge_in_memory(collect_codes(n, options, nullptr,
                                       [t](CodeCollector& c, std::span<const Small> p) {
                                         Buffer a, b, stack;
                                         c.add(encode(iterate_small(p, t, a, b, stack)));
                                       }));
}

std::vector<std::uint64_t> characterized_codes(std::size_t n, std::size_t min_tail,
                                               const EnumerationOptions& options) {
  check_enumeration_bound(n, options);
  return merge_in_memory(
      collect_codes(n, options, nullptr, [min_tail](CodeCollector& c, std::span<const Small> p) {
        if (tail_length_small(p) >= min_tail && descent_tops_are_lr_maxima<Small>(p)) {
          c.add(encode(p));
        }
      }));
}

std::string to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::thm1: return "thm1";
    case DecisionRule::thm2_characterized: return "thm2-characterized";
    case DecisionRule::thm2_zeta: return "thm2-zeta";
    case DecisionRule::oracle_fallback: return "oracle-fallback";
  }
  return "unknown";
}

Membership characterize_membership(const Permutation& p, std::size_t t,
                                   const EnumerationOptions& options) {
  if (!p.is_standard()) throw InvalidInput("membership is decided for permutations of [n]");
  const std::size_t n = p.size();
  if (n == 0) return {true, DecisionRule::thm1};

  // s^t(S_n) = {identity} once t >= n-1, which is the m = 1 case.
  const std::size_t m = t >= n - 1 ? 1 : n - t;
  const bool characterized = tail_length(p) >= n - m && descent_tops_are_lr_maxima(p);

  if (n + 2 >= 2 * m) return {characterized, DecisionRule::thm1};
  if (n + 3 == 2 * m) {
    if (characterized) return {true, DecisionRule::thm2_characterized};
    for (std::size_t l = 3; l <= m; ++l) {
      if (p == zeta(l, m)) return {true, DecisionRule::thm2_zeta};
    }
    return {false, DecisionRule::thm2_characterized};
  }

  try {
    check_enumeration_bound(n, options);
  } catch (const ResourceLimit& e) {
    throw Undecidable("no closed-form rule for n = " + std::to_string(n) + ", t = " +
                      std::to_string(t) + " (n < 2m-3) and brute force is out of bounds: " +
                      e.what());
  }
  const auto codes = image_codes(n, t, options);
  std::vector<Small> small(p.begin(), p.end());
  const bool member = std::binary_search(codes.begin(), codes.end(), encode(small));
  return {member, DecisionRule::oracle_fallback};
}

BigInt count_t_stack_sortable(std::size_t n, std::size_t t, const EnumerationOptions& options) {
  return count_matching(n, options, [t](std::span<const Small> p) {
    Buffer a, b, stack;
    const auto r = iterate_small(p, t, a, b, stack);
    return std::is_sorted(r.begin(), r.end());
  });
}

BigInt count_barred_avoiders(std::size_t n, const EnumerationOptions& options) {
  return count_matching(n, options,
                        [](std::span<const Small> p) { return descent_tops_are_lr_maxima<Small>(p); });
}

}  // namespace stacksort
