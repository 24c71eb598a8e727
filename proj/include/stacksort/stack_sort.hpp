#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// One pass of the stack machine over `in`, writing the popped entries to
/// `out`. `scratch` holds the stack and must be at least in.size() long.
/// Entries must be distinct.
template <class T>
void stack_sort_into(std::span<const T> in, std::span<T> out, std::span<T> scratch) {
  assert(out.size() >= in.size() && scratch.size() >= in.size());
  std::size_t top = 0;  // stack height
  std::size_t written = 0;
  for (const T x : in) {
    while (top > 0 && scratch[top - 1] < x) out[written++] = scratch[--top];
    assert(top == 0 || scratch[top - 1] != x);
    scratch[top++] = x;
  }
  while (top > 0) out[written++] = scratch[--top];
}

/// West's stack-sorting map, single linear pass.
Permutation stack_sort(const Permutation& p);

/// s(LmR) = s(L) s(R) m. Quadratic; kept for differential testing.
Permutation stack_sort_recursive(const Permutation& p);

/// t-fold application of s. Stops early once the permutation is increasing.
Permutation stack_sort_iterate(const Permutation& p, std::size_t t);

struct IterateOutcome {
  Permutation result;
  std::size_t applications = 0;  // passes actually performed (<= t)
};
IterateOutcome stack_sort_iterate_counted(const Permutation& p, std::size_t t);

bool is_t_stack_sortable(const Permutation& p, std::size_t t);

struct StackEvent {
  enum class Kind { push, pop };
  Kind kind;
  Entry value;
  friend bool operator==(const StackEvent&, const StackEvent&) = default;
};

struct StackTrace {
  std::vector<StackEvent> events;
  Permutation output;
};

StackTrace trace_stack_sort(const Permutation& p);

// `push 4` / `pop 1` lines followed by `output <perm>`, newline-terminated.
std::string format_trace(const StackTrace& trace, bool compact = false);

}  // namespace stacksort
