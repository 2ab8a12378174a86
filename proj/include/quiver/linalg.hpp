#pragma once

#include <cstddef>
#include <vector>

namespace quiver {

//! Rank over a field by Gaussian elimination. `rows` is consumed.
template <class Field>
std::size_t matrix_rank(std::vector<std::vector<Field>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == Field(0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Field inv = Field(1) / rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == Field(0)) continue;
      const Field f = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace quiver
