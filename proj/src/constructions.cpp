#include "stacksort/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stacksort/error.hpp"
#include "stacksort/patterns.hpp"

namespace stacksort {

namespace {

std::vector<Entry> preimage_core(const std::vector<Entry>& target) {
  if (target.size() <= 1) return target;

  const auto min_it = std::min_element(target.begin(), target.end());
  const Entry min = *min_it;
  const auto r = static_cast<std::size_t>(min_it - target.begin());

  std::vector<Entry> reduced = target;
  reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<Entry> sigma = preimage_core(reduced);

  if (r == 0) {
    sigma.insert(sigma.begin(), min);
    return sigma;
  }

  const Entry a = target[r - 1];
  const auto a_it = std::find(sigma.begin(), sigma.end(), a);
  const auto b_it = std::find_if(a_it + 1, sigma.end(), [a](Entry e) { return e > a; });
  // a is a left-to-right maximum but not the overall maximum, so b exists.
  if (a_it == sigma.end() || b_it == sigma.end()) {
    throw std::logic_error("lemma1_preimage: no entry larger than a to its right");
  }
  sigma.insert(b_it + 1, min);
  return sigma;
}

void require_lemma1_domain(const Permutation& p) {
  if (p.empty()) return;
  if (p[p.size() - 1] != p.max_entry()) {
    throw PreconditionError("preimage construction needs a permutation ending in its largest entry");
  }
  if (!descent_tops_are_lr_maxima(p)) {
    throw PreconditionError("preimage construction needs a permutation avoiding 32-bar-4-1");
  }
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Permutation lemma1_preimage(const Permutation& p) {
  require_lemma1_domain(p);
  return Permutation(preimage_core({p.begin(), p.end()}));
}

Permutation lift(const Permutation& p, std::size_t t) {
  if (!p.is_standard()) throw PreconditionError("lift expects a permutation of [n]");
  if (!descent_tops_are_lr_maxima(p)) {
    throw PreconditionError("lift needs a permutation avoiding 32-bar-4-1");
  }
  const std::size_t tl = tail_length(p);
  if (t > tl) {
    throw PreconditionError("cannot lift " + std::to_string(t) + " times: tail length is " +
                            std::to_string(tl));
  }
  if (t == 0) return p;

  // p = p* n with p* in S_{n-1}; lift p* one level less, restore n, take one preimage.
  std::vector<Entry> head(p.begin(), p.end() - 1);
  const Permutation tau = lift(Permutation(std::move(head)), t - 1);
  std::vector<Entry> extended(tau.begin(), tau.end());
  extended.push_back(static_cast<Entry>(p.size()));
  return Permutation(preimage_core(extended));
}

Permutation prop1_lift(const Permutation& p) {
  if (!p.is_standard()) throw PreconditionError("lift expects a permutation of [n]");
  return lift(p, tail_length(p));
}

Permutation zeta(std::size_t l, std::size_t m) {
  require_range(m >= 3 && l >= 3 && l <= 2 * m - 3,
                "zeta(l, m) needs 3 <= l <= 2m-3 (got l=" + std::to_string(l) +
                    ", m=" + std::to_string(m) + ")");
  const std::size_t n = 2 * m - 3;
  std::vector<Entry> out{static_cast<Entry>(l), 2, 1};
  for (Entry v = 3; v <= n; ++v) {
    if (v != l) out.push_back(v);
  }
  return Permutation(std::move(out));
}

Permutation xi(std::size_t l, std::size_t m) {
  require_range(m >= 3 && l >= 3 && l <= m,
                "xi(l, m) needs 3 <= l <= m (got l=" + std::to_string(l) +
                    ", m=" + std::to_string(m) + ")");
  std::vector<Entry> out{static_cast<Entry>(l)};
  for (Entry v = static_cast<Entry>(m + 1); v <= 2 * m - 3; ++v) out.push_back(v);
  for (Entry v = 2; v <= m; ++v) {
    if (v != l) out.push_back(v);
  }
  out.push_back(1);
  return Permutation(std::move(out));
}

}  // namespace stacksort
