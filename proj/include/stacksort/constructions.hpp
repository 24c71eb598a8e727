#pragma once

#include <cstddef>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// Canonical preimage under s of a 32-bar-4-1 avoider that ends in its largest
/// entry. The result sorts to p, avoids 32-bar-4-1, and has the same
/// left-to-right maxima as p.
///
/// Built by induction on the smallest entry: a preimage of p with its minimum
/// deleted is extended by putting the minimum in front (when it leads p), or
/// right after the first entry that follows `a` and exceeds it, where `a` is
/// the entry preceding the minimum in p. Works on any distinct positive
/// entries, not only [n].
///
/// Throws PreconditionError if p contains 32-bar-4-1 or does not end in its maximum.
Permutation lemma1_preimage(const Permutation& p);

/// A 32-bar-4-1 avoider sigma with s^t(sigma) = p, for t <= tail_length(p).
/// Strips the trailing fixed entry, lifts the rest t-1 times, restores the
/// entry and takes one canonical preimage.
/// Throws PreconditionError if p contains the pattern, isn't standard, or t > tail_length(p).
Permutation lift(const Permutation& p, std::size_t t);

/// lift(p, tail_length(p)).
Permutation prop1_lift(const Permutation& p);

/// Identity of [2m-3] with 1 and 2 swapped, then `l` moved to the front.
/// Requires 3 <= l <= 2m-3.
Permutation zeta(std::size_t l, std::size_t m);

/// l (m+1) (m+2) ... (2m-3) 2 3 ... (l-1) (l+1) ... m 1, a permutation of
/// [2m-3] with s^(m-3) mapping it to zeta(l, m). Requires 3 <= l <= m.
Permutation xi(std::size_t l, std::size_t m);

}  // namespace stacksort
