#include "stacksort/stack_sort.hpp"

#include <algorithm>

#include "stacksort/text.hpp"

namespace stacksort {

namespace {

void recursive_into(std::span<const Entry> in, std::vector<Entry>& out) {
  if (in.empty()) return;
  const auto max_it = std::max_element(in.begin(), in.end());
  const auto split = static_cast<std::size_t>(max_it - in.begin());
  recursive_into(in.subspan(0, split), out);
  recursive_into(in.subspan(split + 1), out);
  out.push_back(*max_it);
}

}  // namespace

Permutation stack_sort(const Permutation& p) {
  std::vector<Entry> out(p.size());
  std::vector<Entry> stack(p.size());
  stack_sort_into<Entry>(p.entries(), out, stack);
  return Permutation(std::move(out));
}

Permutation stack_sort_recursive(const Permutation& p) {
  std::vector<Entry> out;
  out.reserve(p.size());
  recursive_into(p.entries(), out);
  return Permutation(std::move(out));
}

IterateOutcome stack_sort_iterate_counted(const Permutation& p, std::size_t t) {
  IterateOutcome outcome{p, 0};
  if (t == 0 || p.is_increasing()) return outcome;

  std::vector<Entry> cur(p.begin(), p.end());
  std::vector<Entry> next(p.size());
  std::vector<Entry> stack(p.size());
  while (outcome.applications < t) {
    stack_sort_into<Entry>(cur, next, stack);
    cur.swap(next);
    ++outcome.applications;
    if (std::is_sorted(cur.begin(), cur.end())) break;
  }
  outcome.result = Permutation(std::move(cur));
  return outcome;
}

Permutation stack_sort_iterate(const Permutation& p, std::size_t t) {
  return stack_sort_iterate_counted(p, t).result;
}

bool is_t_stack_sortable(const Permutation& p, std::size_t t) {
  return stack_sort_iterate(p, t).is_increasing();
}

StackTrace trace_stack_sort(const Permutation& p) {
  StackTrace trace;
  trace.events.reserve(2 * p.size());
  std::vector<Entry> stack;
  std::vector<Entry> out;
  auto pop = [&] {
    trace.events.push_back({StackEvent::Kind::pop, stack.back()});
    out.push_back(stack.back());
    stack.pop_back();
  };
  for (Entry x : p) {
    while (!stack.empty() && stack.back() < x) pop();
    trace.events.push_back({StackEvent::Kind::push, x});
    stack.push_back(x);
  }
  while (!stack.empty()) pop();
  trace.output = Permutation(std::move(out));
  return trace;
}

std::string format_trace(const StackTrace& trace, bool compact) {
  std::string out;
  for (const auto& ev : trace.events) {
    out += ev.kind == StackEvent::Kind::push ? "push " : "pop ";
    out += std::to_string(ev.value);
    out += '\n';
  }
  out += "output " + format_permutation(trace.output, compact) + '\n';
  return out;
}

}  // namespace stacksort
