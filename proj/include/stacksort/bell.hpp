#pragma once

#include <cstddef>
#include <vector>

#include "stacksort/bigint.hpp"

namespace stacksort {

/// Bell numbers B_0..B_k from the Bell triangle: row 0 is [1]; row r starts
/// with the last entry of row r-1 and each further entry adds its left
/// neighbour to the entry above that neighbour. B_r is the first entry of row r.
class BellTable {
 public:
  explicit BellTable(std::size_t k);

  std::size_t max_index() const noexcept { return values_.size() - 1; }
  const BigInt& operator[](std::size_t r) const { return values_.at(r); }
  const std::vector<BigInt>& values() const noexcept { return values_; }
  const std::vector<std::vector<BigInt>>& triangle() const noexcept { return rows_; }

 private:
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> values_;
};

BigInt bell(std::size_t k);

}  // namespace stacksort
