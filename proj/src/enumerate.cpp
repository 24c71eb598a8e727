#include "stacksort/enumerate.hpp"

namespace stacksort {

Permutation decode_permutation(std::uint64_t code, std::size_t n) {
  std::vector<Small> small(n);
  decode(code, small);
  return Permutation(std::vector<Entry>(small.begin(), small.end()));
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<Entry> v(n);
  std::iota(v.begin(), v.end(), Entry{1});
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

namespace {

void extend_prefixes(std::size_t n, std::size_t length, std::vector<Small>& current,
                     std::vector<bool>& used, std::vector<std::vector<Small>>& out) {
  if (current.size() == length) {
    out.push_back(current);
    return;
  }
  for (Small e = 1; e <= n; ++e) {
    if (used[e]) continue;
    used[e] = true;
    current.push_back(e);
    extend_prefixes(n, length, current, used, out);
    current.pop_back();
    used[e] = false;
  }
}

}  // namespace

ShardPlan plan_shards(std::size_t n, std::size_t min_tasks) {
  ShardPlan plan;
  plan.n = n;
  std::size_t length = std::min<std::size_t>(1, n);
  std::size_t tasks = n == 0 ? 1 : n;
  while (length < n && tasks < min_tasks) {
    tasks *= n - length;
    ++length;
  }
  plan.prefix_length = length;
  std::vector<Small> current;
  std::vector<bool> used(n + 1, false);
  extend_prefixes(n, length, current, used, plan.prefixes);
  return plan;
}

std::size_t resolve_workers(std::size_t shards) {
  if (shards != 0) return shards;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace stacksort
