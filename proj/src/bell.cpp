#include "stacksort/bell.hpp"

namespace stacksort {

BellTable::BellTable(std::size_t k) {
  rows_.reserve(k + 1);
  rows_.push_back({BigInt(1)});
  for (std::size_t r = 1; r <= k; ++r) {
    const auto& above = rows_.back();
    std::vector<BigInt> row;
    row.reserve(r + 1);
    row.push_back(above.back());
    for (std::size_t j = 0; j < r; ++j) row.push_back(row.back() + above[j]);
    rows_.push_back(std::move(row));
  }
  values_.reserve(k + 1);
  for (const auto& row : rows_) values_.push_back(row.front());
}

BigInt bell(std::size_t k) { return BellTable(k)[k]; }

}  // namespace stacksort
