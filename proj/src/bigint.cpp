#include "stacksort/bigint.hpp"

#include <algorithm>

namespace stacksort {

BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;  // exact: out is now (n choose i+1)
  }
  return out;
}

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt two_stack_sortable_formula(std::size_t n) {
  const BigInt num = 2 * binomial(3 * n, n);
  const BigInt den = BigInt(n + 1) * (2 * n + 1);
  return num / den;
}

}  // namespace stacksort
