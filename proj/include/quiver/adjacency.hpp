#pragma once

// Adjacency matrices over exact integers. The (v,w) entry of A^k counts
// the k-paths from v to w.

#include <optional>
#include <string>
#include <vector>

#include "quiver/error.hpp"
#include "quiver/graph.hpp"
#include "quiver/numeric.hpp"

namespace quiver {

struct CountMatrix {
  std::vector<std::string> index;
  std::vector<std::vector<BigInt>> rows;

  [[nodiscard]] std::size_t dim() const noexcept { return rows.size(); }

  static CountMatrix zero(std::vector<std::string> index) {
    CountMatrix m;
    m.rows.assign(index.size(), std::vector<BigInt>(index.size(), BigInt(0)));
    m.index = std::move(index);
    return m;
  }

  static CountMatrix identity(std::vector<std::string> index) {
    auto m = zero(std::move(index));
    for (std::size_t i = 0; i < m.dim(); ++i) m.rows[i][i] = 1;
    return m;
  }

  //! Index defaults to "1".."n".
  static CountMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::string> idx;
    for (std::size_t i = 0; i < rows.size(); ++i) idx.push_back(std::to_string(i + 1));
    auto m = zero(std::move(idx));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) fail(ErrorCode::DimensionMismatch, "matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] < 0) fail(ErrorCode::InvalidRange, "negative matrix entry");
        m.rows[i][j] = rows[i][j];
      }
    }
    return m;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& r : rows) {
      for (const auto& x : r) {
        if (x != 0) return false;
      }
    }
    return true;
  }

  [[nodiscard]] BigInt entry_sum() const {
    BigInt s = 0;
    for (const auto& r : rows) {
      for (const auto& x : r) s += x;
    }
    return s;
  }

  //! Entries only; the index labels are not compared.
  friend bool operator==(const CountMatrix& a, const CountMatrix& b) { return a.rows == b.rows; }
};

inline CountMatrix adjacency_matrix(const Graph& g) {
  detail::require_no_bundles(g, "adjacency_matrix");
  auto m = CountMatrix::zero(g.vertices());
  for (const auto& e : g.edges()) m.rows[e.src][e.dst] += 1;
  return m;
}

inline CountMatrix mat_mul(const CountMatrix& a, const CountMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "mat_mul of differently sized matrices");
  const std::size_t n = a.dim();
  auto c = CountMatrix::zero(a.index);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a.rows[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.rows[l][j] != 0) c.rows[i][j] += a.rows[i][l] * b.rows[l][j];
      }
    }
  }
  return c;
}

//! Repeated squaring; k >= 1.
inline CountMatrix mat_pow(const CountMatrix& a, std::size_t k) {
  if (k < 1) fail(ErrorCode::InvalidRange, "mat_pow needs k >= 1");
  CountMatrix result = CountMatrix::identity(a.index);
  CountMatrix base = a;
  bool first = true;
  while (k) {
    if (k & 1) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return result;
}

//! Sum of the entries of A(E)^k; k = 0 gives the vertex count.
inline BigInt count_paths_matrix(const Graph& g, std::size_t k) {
  auto a = adjacency_matrix(g);
  if (k == 0) return BigInt(g.vertex_count());
  return mat_pow(a, k).entry_sum();
}

//! Smallest n with A^n = 0, or nullopt. Testing up to n = dim suffices.
inline std::optional<std::size_t> is_nilpotent(const CountMatrix& a) {
  if (a.dim() == 0) return 1;
  CountMatrix p = a;
  for (std::size_t n = 1; n <= a.dim(); ++n) {
    if (p.is_zero()) return n;
    if (n < a.dim()) p = mat_mul(p, a);
  }
  return std::nullopt;
}

//! E(A): vertices "1".."n", edges "i:j:t" for t = 1..A_ij.
inline Graph graph_from_matrix(const CountMatrix& m) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < m.dim(); ++i) vs.push_back(std::to_string(i + 1));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.rows[i][j] < 0) fail(ErrorCode::InvalidRange, "negative matrix entry");
      auto count = static_cast<unsigned long long>(m.rows[i][j]);
      for (unsigned long long t = 1; t <= count; ++t) {
        es.push_back({std::to_string(i + 1) + ":" + std::to_string(j + 1) + ":" + std::to_string(t), i, j});
      }
    }
  }
  return detail::assemble(std::move(vs), std::move(es), {}, false);
}

}  // namespace quiver
