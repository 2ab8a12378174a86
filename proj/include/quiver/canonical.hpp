#pragma once

// Isomorphism-invariant keys for small multigraphs, by colour refinement and
// individualization over the full search tree. The key is the smallest
// relabelled adjacency string over all leaves, so it is exact at any size;
// cost grows with the number of leaves, which stays small for the graphs
// the brute-force searches produce.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "quiver/adjacency.hpp"
#include "quiver/graph.hpp"

namespace quiver {

//! Dense multiplicity matrices, row-major n*n. `bundles` may be empty.
struct DenseMultigraph {
  std::size_t n = 0;
  std::vector<unsigned> adj;
  std::vector<unsigned> bundles;

  [[nodiscard]] unsigned at(std::size_t i, std::size_t j) const { return adj[i * n + j]; }
  [[nodiscard]] unsigned bundle_at(std::size_t i, std::size_t j) const {
    return bundles.empty() ? 0u : bundles[i * n + j];
  }
};

inline DenseMultigraph to_dense(const Graph& g) {
  DenseMultigraph d;
  d.n = g.vertex_count();
  d.adj.assign(d.n * d.n, 0);
  for (const auto& e : g.edges()) ++d.adj[e.src * d.n + e.dst];
  if (g.has_bundles()) {
    d.bundles.assign(d.n * d.n, 0);
    for (const auto& b : g.bundles()) d.bundles[b.src * d.n + b.dst] = 1;
  }
  return d;
}

struct CanonicalForm {
  //! order[i] is the original vertex placed at canonical position i.
  std::vector<std::size_t> order;
  std::string key;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const DenseMultigraph& g) : g_(g) {}

  CanonicalForm run() {
    std::vector<int> col(g_.n, 0);
    search(refine(std::move(col)));
    CanonicalForm out;
    out.order = best_order_;
    out.key = std::to_string(g_.n) + "|";
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (i) out.key += (i == g_.n * g_.n ? "|" : ",");
      out.key += std::to_string(best_[i]);
    }
    return out;
  }

 private:
  std::vector<int> refine(std::vector<int> col) const {
    const std::size_t n = g_.n;
    std::size_t classes = count_classes(col);
    while (true) {
      std::vector<std::vector<long>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.push_back(col[v]);
        append_part(s, -1, [&](std::size_t u) { return g_.at(v, u); }, col);
        append_part(s, -2, [&](std::size_t u) { return g_.at(u, v); }, col);
        if (!g_.bundles.empty()) {
          append_part(s, -3, [&](std::size_t u) { return g_.bundle_at(v, u); }, col);
          append_part(s, -4, [&](std::size_t u) { return g_.bundle_at(u, v); }, col);
        }
      }
      auto uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      std::vector<int> next(n);
      for (std::size_t v = 0; v < n; ++v) {
        next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      }
      if (uniq.size() == classes) return next;
      classes = uniq.size();
      col = std::move(next);
    }
  }

  template <class F>
  void append_part(std::vector<long>& s, long marker, F weight, const std::vector<int>& col) const {
    std::vector<std::pair<long, long>> items;
    for (std::size_t u = 0; u < g_.n; ++u) {
      long w = weight(u);
      if (w) items.emplace_back(col[u], w);
    }
    std::sort(items.begin(), items.end());
    s.push_back(marker);
    for (auto [c, w] : items) {
      s.push_back(c);
      s.push_back(w);
    }
  }

  static std::size_t count_classes(const std::vector<int>& col) {
    auto c = col;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Swapping u and v (fixing everything else) is an automorphism.
  bool twins(std::size_t u, std::size_t v) const {
    if (g_.at(u, u) != g_.at(v, v) || g_.at(u, v) != g_.at(v, u)) return false;
    if (g_.bundle_at(u, u) != g_.bundle_at(v, v) || g_.bundle_at(u, v) != g_.bundle_at(v, u)) return false;
    for (std::size_t x = 0; x < g_.n; ++x) {
      if (x == u || x == v) continue;
      if (g_.at(u, x) != g_.at(v, x) || g_.at(x, u) != g_.at(x, v)) return false;
      if (g_.bundle_at(u, x) != g_.bundle_at(v, x) || g_.bundle_at(x, u) != g_.bundle_at(x, v)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& col) {
    const std::size_t n = g_.n;
    std::vector<std::size_t> size(n, 0);
    for (auto c : col) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(col);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); });
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
      search(refine(std::move(next)));
    }
  }

  void leaf(const std::vector<int>& col) {
    const std::size_t n = g_.n;
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(col[v])] = v;
    std::vector<unsigned> cert;
    cert.reserve(n * n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cert.push_back(g_.at(order[i], order[j]));
    }
    if (!g_.bundles.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cert.push_back(g_.bundle_at(order[i], order[j]));
      }
    }
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_order_ = std::move(order);
      have_best_ = true;
    }
  }

  const DenseMultigraph& g_;
  bool have_best_ = false;
  std::vector<unsigned> best_;
  std::vector<std::size_t> best_order_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const DenseMultigraph& g) {
  if (g.n == 0) return CanonicalForm{{}, "0|"};
  return detail::Canonizer(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form(to_dense(g)); }

inline std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_key(a) == canonical_key(b);
}

//! Relabelled copy in canonical vertex order with generated ids (vertices
//! "1".."n", edges "i:j:t"). Infinite bundles are dropped.
inline Graph canonical_graph(const DenseMultigraph& g) {
  auto cf = canonical_form(g);
  std::vector<std::vector<long long>> rows(g.n, std::vector<long long>(g.n, 0));
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) rows[i][j] = g.at(cf.order[i], cf.order[j]);
  }
  return graph_from_matrix(CountMatrix::from_rows(rows));
}

}  // namespace quiver
