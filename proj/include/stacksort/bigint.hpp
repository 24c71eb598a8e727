#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacksort {

// Exact integer used for every count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

// (2n choose n) / (n+1)
BigInt catalan(std::size_t n);

// 2 (3n choose n) / ((n+1)(2n+1)): the number of 2-stack-sortable permutations of [n].
BigInt two_stack_sortable_formula(std::size_t n);

}  // namespace stacksort
