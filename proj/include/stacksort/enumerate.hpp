#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

// Packed entries are 1..16, so a permutation of [n] fits a nibble per entry.
using Small = std::uint8_t;
inline constexpr std::size_t kMaxPackedLength = 16;

/// Nibble-packed code, first entry in the most significant used nibble, so
/// numeric order on codes of equal length is lexicographic order.
inline std::uint64_t encode(std::span<const Small> p) {
  std::uint64_t code = 0;
  for (Small e : p) code = (code << 4) | static_cast<std::uint64_t>(e - 1);
  return code;
}

inline void decode(std::uint64_t code, std::span<Small> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Small>((code & 0xF) + 1);
    code >>= 4;
  }
}

Permutation decode_permutation(std::uint64_t code, std::size_t n);

/// Every permutation of [n] in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

/// Fixed leading entries that split S_n into disjoint lexicographic ranges.
/// The prefix length is the smallest that yields at least `min_tasks` ranges
/// (capped at n); prefixes are listed in lexicographic order.
struct ShardPlan {
  std::size_t n = 0;
  std::size_t prefix_length = 0;
  std::vector<std::vector<Small>> prefixes;
};
ShardPlan plan_shards(std::size_t n, std::size_t min_tasks);

// 0 means one worker per hardware thread.
std::size_t resolve_workers(std::size_t shards);

/// Runs `visit(state, perm)` over all of S_n on `workers` threads. Each worker
/// owns one State built by `make_state()`; workers claim shards from a shared
/// counter and share nothing else. Returns the per-worker states for merging.
template <class State, class MakeState, class Visit>
std::vector<State> run_sharded(std::size_t n, std::size_t workers, MakeState make_state,
                               Visit visit) {
  workers = std::max<std::size_t>(workers, 1);
  const ShardPlan plan = plan_shards(n, workers);
  workers = std::min(workers, plan.prefixes.size());

  std::vector<State> states;
  states.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) states.push_back(make_state());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](State& state) {
    try {
      std::vector<Small> perm(n);
      for (std::size_t task; (task = next.fetch_add(1)) < plan.prefixes.size();) {
        const auto& prefix = plan.prefixes[task];
        std::copy(prefix.begin(), prefix.end(), perm.begin());
        std::vector<bool> used(n + 1, false);
        for (Small e : prefix) used[e] = true;
        std::size_t k = prefix.size();
        for (Small e = 1; e <= n; ++e) {
          if (!used[e]) perm[k++] = e;
        }
        const auto suffix = perm.begin() + static_cast<std::ptrdiff_t>(prefix.size());
        do {
          visit(state, std::span<const Small>(perm));
        } while (std::next_permutation(suffix, perm.end()));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(plan.prefixes.size());
    }
  };

  if (workers == 1) {
    work(states.front());
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (auto& s : states) threads.emplace_back([&work, &s] { work(s); });
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

}  // namespace stacksort
