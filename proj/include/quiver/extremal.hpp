#pragma once

// The optimal k-path bound P^N_k, its maximizer, and the reshaping pipeline
// that carries any loop-free N-edge graph to the maximizer without ever
// decreasing the number of k-paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "quiver/adjacency.hpp"
#include "quiver/canonical.hpp"
#include "quiver/error.hpp"
#include "quiver/graph.hpp"

namespace quiver {

struct BoundDecomposition {
  std::size_t n = 0;  // N = n*k + r
  std::size_t r = 0;
  BigInt value;
};

inline BoundDecomposition bound_decomposition(std::size_t N, std::size_t k) {
  if (k < 1 || k > N) fail(ErrorCode::InvalidRange, "optimal_bound needs 1 <= k <= N");
  BoundDecomposition d;
  d.n = N / k;
  d.r = N % k;
  d.value = ipow(BigInt(d.n + 1), static_cast<unsigned>(d.r)) * ipow(BigInt(d.n), static_cast<unsigned>(k - d.r));
  return d;
}

//! (n+1)^r * n^(k-r) with N = n*k + r, 0 <= r < k.
inline BigInt optimal_bound(std::size_t N, std::size_t k) { return bound_decomposition(N, k).value; }

//! Thick path on k+1 vertices "v1".."v{k+1}" whose last r bundles carry n+1
//! edges and the others n. Edge ids are "e1".."eN" along the path.
inline Graph maximizer_graph(std::size_t N, std::size_t k) {
  auto d = bound_decomposition(N, k);
  std::vector<std::string> vs;
  for (std::size_t i = 1; i <= k + 1; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  std::size_t id = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t size = d.n + (i >= k - d.r ? 1 : 0);
    for (std::size_t t = 0; t < size; ++t) es.push_back({"e" + std::to_string(id++), i, i + 1});
  }
  return detail::assemble(std::move(vs), std::move(es), {}, false);
}

// ---------------------------------------------------------------------------
// Pipeline steps

namespace detail {

// Mutable working copy used by the reshaping steps.
struct WorkGraph {
  std::vector<std::string> names;
  std::vector<Edge> edges;

  static WorkGraph of(const Graph& g) { return {g.vertices(), g.edges()}; }
  [[nodiscard]] Graph freeze() const { return assemble(names, edges, {}, true); }

  void remove_vertex(std::size_t v) {
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& e : edges) {
      if (e.src > v) --e.src;
      if (e.dst > v) --e.dst;
    }
  }

  void reorder(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> pos(order.size());
    std::vector<std::string> nn;
    for (std::size_t i = 0; i < order.size(); ++i) {
      pos[order[i]] = i;
      nn.push_back(names[order[i]]);
    }
    names = std::move(nn);
    for (auto& e : edges) {
      e.src = pos[e.src];
      e.dst = pos[e.dst];
    }
  }

  [[nodiscard]] std::vector<std::size_t> bundle_edges(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].src == i && edges[e].dst == i + 1) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
    return out;
  }

  // Moves the `count` largest-id edges of bundle `from` onto bundle `to`.
  void move_bundle_edges(std::size_t from, std::size_t to, std::size_t count) {
    auto es = bundle_edges(from);
    for (std::size_t t = 0; t < count; ++t) {
      auto& e = edges[es[es.size() - 1 - t]];
      e.src = to;
      e.dst = to + 1;
    }
  }
};

inline void require_loop_free_plain(const Graph& g, const char* op) {
  require_no_bundles(g, op);
  if (has_loop(g)) fail(ErrorCode::HasLoop, std::string(op) + " needs a loop-free graph");
}

// Vertex order along a Hamiltonian chain, or nullopt when some pair of
// vertices is unrelated.
inline std::optional<std::vector<std::size_t>> chain_order(const Graph& g) {
  auto order = topological_order(g);
  if (!order) return std::nullopt;
  for (std::size_t i = 0; i + 1 < order->size(); ++i) {
    bool joined = false;
    for (auto e : g.out_edges((*order)[i])) {
      if (g.edge(e).dst == (*order)[i + 1]) joined = true;
    }
    if (!joined) return std::nullopt;
  }
  return order;
}

inline WorkGraph chained_work(const Graph& g, const char* op) {
  require_loop_free_plain(g, op);
  auto order = chain_order(g);
  if (!order) fail(ErrorCode::NotTotallyOrdered, std::string(op) + " needs every vertex on one longest path");
  auto w = WorkGraph::of(g);
  w.reorder(*order);
  return w;
}

inline std::size_t bundle_size(const WorkGraph& w, std::size_t i) {
  std::size_t c = 0;
  for (const auto& e : w.edges) c += (e.src == i && e.dst == i + 1);
  return c;
}

}  // namespace detail

//! Drops vertices touching no edge and no infinite bundle.
inline Graph remove_isolated(const Graph& g) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (const auto& e : g.edges()) keep[e.src] = keep[e.dst] = 1;
  for (const auto& b : g.bundles()) keep[b.src] = keep[b.dst] = 1;
  std::vector<std::string> vs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) vs.push_back(g.vertex_name(v));
  }
  return detail::assemble_from_specs(std::move(vs), g.edge_specs(), g.bundle_specs(), true);
}

//! Merges the first unrelated vertex pair (i, j), i < j, keeping i's name,
//! until every pair is comparable; then lists vertices along the chain.
inline Graph identify_unrelated(const Graph& g) {
  detail::require_loop_free_plain(g, "identify_unrelated");
  auto w = detail::WorkGraph::of(g);
  while (true) {
    auto cur = w.freeze();
    auto reach = reachability(cur, false);
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < w.names.size() && !pair; ++i) {
      for (std::size_t j = i + 1; j < w.names.size(); ++j) {
        if (!reach[i][j] && !reach[j][i]) {
          pair = std::pair(i, j);
          break;
        }
      }
    }
    if (!pair) {
      auto order = topological_order(cur);
      w.reorder(*order);
      return w.freeze();
    }
    auto [i, j] = *pair;
    for (auto& e : w.edges) {
      if (e.src == j) e.src = i;
      if (e.dst == j) e.dst = i;
    }
    w.remove_vertex(j);
  }
}

//! One front position of the alignment: edges leaving vertex m (1-based)
//! that skip ahead are re-sourced at vertex m+1, then the first m bundles
//! are insertion-sorted into ascending order by relocating edges.
inline Graph align_stage(const Graph& g, std::size_t m) {
  auto w = detail::chained_work(g, "align_stage");
  const std::size_t l = w.names.size() - 1;
  if (m < 1 || m > l) fail(ErrorCode::InvalidRange, "align_stage position out of range");
  const std::size_t i = m - 1;
  for (auto& e : w.edges) {
    if (e.src == i && e.dst >= i + 2) e.src = i + 1;
  }
  std::vector<std::size_t> size(m);
  for (std::size_t t = 0; t < m; ++t) size[t] = detail::bundle_size(w, t);
  for (std::size_t p = 1; p < m; ++p) {
    for (std::size_t q = p; q > 0 && size[q - 1] > size[q]; --q) {
      std::size_t diff = size[q - 1] - size[q];
      w.move_bundle_edges(q - 1, q, diff);
      std::swap(size[q - 1], size[q]);
    }
  }
  return w.freeze();
}

//! Stages 1..k of the alignment. Needs a longest path through every vertex
//! of length at least k.
inline Graph align_and_sort(const Graph& g, std::size_t k) {
  auto w = detail::chained_work(g, "align_and_sort");
  if (w.names.size() < k + 1) fail(ErrorCode::NoKPath, "longest path is shorter than k");
  Graph cur = w.freeze();
  for (std::size_t m = 1; m <= k; ++m) cur = align_stage(cur, m);
  return cur;
}

//! True when the first k vertices of the chain emit only into the next
//! vertex and the first k bundles ascend.
inline bool is_fk_form(const Graph& g, std::size_t k) {
  if (g.has_bundles() || has_loop(g)) return false;
  auto order = detail::chain_order(g);
  if (!order || order->size() < k + 1) return false;
  auto w = detail::WorkGraph::of(g);
  w.reorder(*order);
  for (const auto& e : w.edges) {
    if (e.src < k && e.dst != e.src + 1) return false;
  }
  for (std::size_t t = 0; t + 1 < k; ++t) {
    if (detail::bundle_size(w, t) > detail::bundle_size(w, t + 1)) return false;
  }
  return true;
}

//! Removes the first vertex of an F_k-form graph with l > k and re-attaches
//! its bundle between vertices k+1 and k+2.
inline Graph merge_front(const Graph& g, std::size_t k) {
  if (k < 1 || !is_fk_form(g, k)) fail(ErrorCode::NotInFkForm, "merge_front needs F_k form");
  auto w = detail::chained_work(g, "merge_front");
  if (w.names.size() <= k + 1) fail(ErrorCode::NotInFkForm, "merge_front needs a longest path longer than k");
  for (auto& e : w.edges) {
    if (e.src == 0) {
      e.src = k;
      e.dst = k + 1;
    }
  }
  w.remove_vertex(0);
  return w.freeze();
}

//! Moves one unit from the first maximal entry to the first minimal entry
//! while they differ by more than one.
inline std::vector<std::size_t> redistribute(std::vector<std::size_t> profile) {
  if (profile.empty()) fail(ErrorCode::InvalidRange, "redistribute of an empty profile");
  while (true) {
    auto hi = std::max_element(profile.begin(), profile.end());
    auto lo = std::min_element(profile.begin(), profile.end());
    if (*hi - *lo <= 1) return profile;
    --*hi;
    ++*lo;
  }
}

//! Bundle sizes when g is a thick path (all edges between consecutive chain
//! vertices); nullopt otherwise.
inline std::optional<std::vector<std::size_t>> thick_profile(const Graph& g) {
  if (g.has_bundles() || g.empty() || has_loop(g)) return std::nullopt;
  auto order = detail::chain_order(g);
  if (!order) return std::nullopt;
  auto w = detail::WorkGraph::of(g);
  w.reorder(*order);
  std::vector<std::size_t> prof(w.names.size() - 1, 0);
  for (const auto& e : w.edges) {
    if (e.dst != e.src + 1) return std::nullopt;
    ++prof[e.src];
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Full pipeline with certificates

enum class StepKind {
  RemoveIsolated,
  IdentifyUnrelated,
  ShiftE2,
  ShiftSortE3E4,
  MergeGl,
  AttachResidual,
  Redistribute,
};

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::RemoveIsolated: return "RemoveIsolated";
    case StepKind::IdentifyUnrelated: return "IdentifyUnrelated";
    case StepKind::ShiftE2: return "ShiftE2";
    case StepKind::ShiftSortE3E4: return "ShiftSortE3E4";
    case StepKind::MergeGl: return "MergeGl";
    case StepKind::AttachResidual: return "AttachResidual";
    case StepKind::Redistribute: return "Redistribute";
  }
  return "?";
}

inline std::optional<StepKind> step_kind_from_string(const std::string& s) {
  for (auto k : {StepKind::RemoveIsolated, StepKind::IdentifyUnrelated, StepKind::ShiftE2, StepKind::ShiftSortE3E4,
                 StepKind::MergeGl, StepKind::AttachResidual, StepKind::Redistribute}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct TraceStep {
  StepKind kind;
  Graph snapshot;
  BigInt count;
};

struct ReshapeTrace {
  std::size_t k = 0;
  std::vector<TraceStep> steps;
};

struct TraceCertificate {
  bool monotone = true;
  bool loop_free = true;
  bool edge_count_invariant = true;
  bool counts_match = true;
  bool final_optimal = true;
  std::string detail;

  [[nodiscard]] bool ok() const {
    return monotone && loop_free && edge_count_invariant && counts_match && final_optimal;
  }
};

//! Re-checks every claim a trace makes, recounting each snapshot.
inline TraceCertificate verify_trace(const ReshapeTrace& t) {
  TraceCertificate c;
  if (t.steps.empty()) {
    c.final_optimal = false;
    c.detail = "empty trace";
    return c;
  }
  const std::size_t N = t.steps.front().snapshot.edge_count();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    std::string where = "step " + std::to_string(i) + " (" + to_string(s.kind) + ")";
    if (s.snapshot.has_bundles() || has_loop(s.snapshot)) {
      c.loop_free = false;
      c.detail += where + ": snapshot has a loop; ";
      continue;
    }
    if (s.snapshot.edge_count() != N) {
      c.edge_count_invariant = false;
      c.detail += where + ": edge count changed; ";
    }
    if (count_paths_matrix(s.snapshot, t.k) != s.count) {
      c.counts_match = false;
      c.detail += where + ": recorded count is wrong; ";
    }
    if (i > 0 && s.count < t.steps[i - 1].count) {
      c.monotone = false;
      c.detail += where + ": count decreased; ";
    }
  }
  const auto& last = t.steps.back();
  auto prof = thick_profile(last.snapshot);
  bool optimal = N >= t.k && t.k >= 1 && last.count == optimal_bound(N, t.k);
  if (optimal && prof) {
    auto d = bound_decomposition(N, t.k);
    auto sorted = *prof;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> want(t.k, d.n);
    for (std::size_t i = t.k - d.r; i < t.k; ++i) want[i] = d.n + 1;
    optimal = sorted == want;
  } else {
    optimal = false;
  }
  if (!optimal) {
    c.final_optimal = false;
    c.detail += "final snapshot is not the balanced thick path; ";
  }
  return c;
}

namespace detail {

inline std::string fresh_name(const std::vector<std::string>& names, std::size_t& counter) {
  while (true) {
    std::string cand = "aux" + std::to_string(++counter);
    if (std::find(names.begin(), names.end(), cand) == names.end()) return cand;
  }
}

// Lengthens a chain of length l < k by moving non-spine edges to hang off the
// last vertex. Counts of k-paths are zero before, so nothing can decrease.
inline Graph extend_chain(const Graph& g, std::size_t k) {
  auto w = chained_work(g, "extend_chain");
  std::size_t counter = 0;
  while (w.names.size() < k + 1) {
    std::vector<char> spine(w.edges.size(), 0);
    for (std::size_t i = 0; i + 1 < w.names.size(); ++i) spine[w.bundle_edges(i).front()] = 1;
    std::optional<std::size_t> pick;
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
      if (!spine[e] && (!pick || w.edges[e].id > w.edges[*pick].id)) pick = e;
    }
    if (!pick) fail(ErrorCode::InvalidRange, "not enough edges to reach a path of length k");
    w.names.push_back(fresh_name(w.names, counter));
    w.edges[*pick].src = w.names.size() - 2;
    w.edges[*pick].dst = w.names.size() - 1;
  }
  return w.freeze();
}

// With l = k, edges between non-consecutive chain vertices join the
// currently smallest bundle, one at a time.
inline Graph attach_residual(const Graph& g) {
  auto w = chained_work(g, "attach_residual");
  const std::size_t k = w.names.size() - 1;
  std::vector<std::size_t> size(k, 0);
  for (const auto& e : w.edges) {
    if (e.dst == e.src + 1) ++size[e.src];
  }
  std::vector<std::size_t> residual;
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    if (w.edges[e].dst != w.edges[e].src + 1) residual.push_back(e);
  }
  std::sort(residual.begin(), residual.end(),
            [&](std::size_t a, std::size_t b) { return w.edges[a].id < w.edges[b].id; });
  for (auto e : residual) {
    auto t = static_cast<std::size_t>(std::min_element(size.begin(), size.end()) - size.begin());
    w.edges[e].src = t;
    w.edges[e].dst = t + 1;
    ++size[t];
  }
  return w.freeze();
}

inline Graph redistribute_graph(const Graph& g) {
  auto w = chained_work(g, "redistribute");
  const std::size_t k = w.names.size() - 1;
  std::vector<std::size_t> size(k);
  for (std::size_t t = 0; t < k; ++t) size[t] = bundle_size(w, t);
  while (true) {
    auto hi = static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());
    auto lo = static_cast<std::size_t>(std::min_element(size.begin(), size.end()) - size.begin());
    if (size[hi] - size[lo] <= 1) break;
    w.move_bundle_edges(hi, lo, 1);
    --size[hi];
    ++size[lo];
  }
  return w.freeze();
}

}  // namespace detail

//! Runs the whole reshaping pipeline. Step 0 is always RemoveIsolated; later
//! steps are recorded only when they change the graph.
inline ReshapeTrace maximize_with_trace(const Graph& g, std::size_t k) {
  detail::require_loop_free_plain(g, "maximize_with_trace");
  if (k < 1 || g.edge_count() < k) fail(ErrorCode::InvalidRange, "maximize_with_trace needs 1 <= k <= N");
  ReshapeTrace t;
  t.k = k;
  auto record = [&](StepKind kind, const Graph& h) { t.steps.push_back({kind, h, count_paths_matrix(h, k)}); };
  auto advance = [&](StepKind kind, Graph next, Graph& cur) {
    if (!(next == cur)) {
      record(kind, next);
      cur = std::move(next);
    }
  };

  Graph cur = remove_isolated(g);
  record(StepKind::RemoveIsolated, cur);
  advance(StepKind::IdentifyUnrelated, identify_unrelated(cur), cur);
  if (cur.vertex_count() < k + 1) advance(StepKind::AttachResidual, detail::extend_chain(cur, k), cur);

  while (true) {
    advance(StepKind::ShiftE2, align_stage(cur, 1), cur);
    Graph sorted = cur;
    for (std::size_t m = 2; m <= k; ++m) sorted = align_stage(sorted, m);
    advance(StepKind::ShiftSortE3E4, std::move(sorted), cur);
    if (cur.vertex_count() == k + 1) break;
    advance(StepKind::MergeGl, merge_front(cur, k), cur);
  }
  advance(StepKind::AttachResidual, detail::attach_residual(cur), cur);
  advance(StepKind::Redistribute, detail::redistribute_graph(cur), cur);
  return t;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

struct BruteForceResult {
  BigInt value;
  Graph witness;
  std::size_t graphs_examined = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 50'000'000;

namespace detail {

inline std::uint64_t dense_count(const DenseMultigraph& d, std::size_t k) {
  std::vector<std::uint64_t> ways(d.n, 1), next(d.n);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t v = 0; v < d.n; ++v) {
      std::uint64_t acc = 0;
      for (std::size_t u = 0; u < d.n; ++u) acc += d.adj[v * d.n + u] * ways[u];
      next[v] = acc;
    }
    std::swap(ways, next);
  }
  std::uint64_t total = 0;
  for (auto x : ways) total += x;
  return total;
}

inline DenseMultigraph grow(const DenseMultigraph& d, std::size_t extra) {
  DenseMultigraph out;
  out.n = d.n + extra;
  out.adj.assign(out.n * out.n, 0);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) out.adj[i * out.n + j] = d.adj[i * d.n + j];
  }
  return out;
}

// reach[v] bit w: a path of length >= 1 from v to w.
inline std::vector<std::uint64_t> dense_reach(const DenseMultigraph& d) {
  std::vector<std::uint64_t> reach(d.n, 0);
  for (std::size_t v = 0; v < d.n; ++v) {
    for (std::size_t u = 0; u < d.n; ++u) {
      if (d.adj[v * d.n + u]) reach[v] |= (1ULL << u);
    }
  }
  for (std::size_t m = 0; m < d.n; ++m) {
    for (std::size_t v = 0; v < d.n; ++v) {
      if (reach[v] >> m & 1) reach[v] |= reach[m];
    }
  }
  return reach;
}

// Every loop-free multigraph obtained by adding one edge, where each vertex
// stays incident to an edge: between existing vertices, to/from one new
// vertex, or between two new vertices.
template <class Visit>
void for_each_extension(const DenseMultigraph& d, std::size_t vertex_cap, Visit&& visit) {
  auto reach = dense_reach(d);
  for (std::size_t u = 0; u < d.n; ++u) {
    for (std::size_t v = 0; v < d.n; ++v) {
      if (u == v || (reach[v] >> u & 1)) continue;
      DenseMultigraph e = d;
      ++e.adj[u * d.n + v];
      visit(e);
    }
  }
  if (d.n + 1 <= vertex_cap) {
    for (std::size_t u = 0; u < d.n; ++u) {
      DenseMultigraph a = grow(d, 1);
      ++a.adj[u * a.n + d.n];
      visit(a);
      DenseMultigraph b = grow(d, 1);
      ++b.adj[d.n * b.n + u];
      visit(b);
    }
  }
  if (d.n + 2 <= vertex_cap) {
    DenseMultigraph c = grow(d, 2);
    ++c.adj[d.n * c.n + d.n + 1];
    visit(c);
  }
}

struct LevelEntry {
  DenseMultigraph graph;
};

// Isomorphism classes of loop-free multigraphs with `edges` edges and no
// isolated vertices, level by level. `keep` may prune a class (and all of
// its descendants). The callback `at_last` sees every raw extension at the
// final level without dedup.
template <class Keep, class AtLast>
void edge_levels(std::size_t edges, std::size_t vertex_cap, std::size_t budget, std::size_t& examined,
                 Keep&& keep, AtLast&& at_last) {
  std::vector<DenseMultigraph> level{DenseMultigraph{}};
  for (std::size_t L = 0; L < edges; ++L) {
    const bool last = (L + 1 == edges);
    std::unordered_set<std::string> seen;
    std::vector<DenseMultigraph> next;
    for (const auto& d : level) {
      for_each_extension(d, vertex_cap, [&](const DenseMultigraph& e) {
        if (++examined > budget) fail(ErrorCode::SearchBudgetExceeded, "search budget exhausted");
        if (last) {
          at_last(e);
          return;
        }
        auto cf = canonical_form(e);
        if (!seen.insert(cf.key).second) return;
        if (!keep(e)) return;
        next.push_back(e);
      });
    }
    level = std::move(next);
  }
}

}  // namespace detail

//! Maximum k-path count over all loop-free N-edge multigraphs without
//! isolated vertices and at most `vertex_cap` vertices (default 2N), with
//! the witness of smallest canonical key.
inline BruteForceResult brute_force_max(std::size_t N, std::size_t k, std::size_t vertex_cap = 0,
                                        std::size_t budget = kDefaultSearchBudget) {
  if (k < 1 || k > N) fail(ErrorCode::InvalidRange, "brute_force_max needs 1 <= k <= N");
  if (N > 40) fail(ErrorCode::InvalidRange, "brute_force_max is limited to N <= 40");
  if (vertex_cap == 0) vertex_cap = 2 * N;
  vertex_cap = std::min<std::size_t>(vertex_cap, 64);
  BruteForceResult res;
  std::uint64_t best = 0;
  bool have = false;
  std::string best_key;
  DenseMultigraph best_graph;
  detail::edge_levels(
      N, vertex_cap, budget, res.graphs_examined, [](const DenseMultigraph&) { return true; },
      [&](const DenseMultigraph& e) {
        auto c = detail::dense_count(e, k);
        if (have && c < best) return;
        auto key = canonical_form(e).key;
        if (!have || c > best || key < best_key) {
          best = c;
          best_key = key;
          best_graph = e;
          have = true;
        }
      });
  if (!have) fail(ErrorCode::SearchBudgetExceeded, "vertex cap admits no graph");
  res.value = BigInt(best);
  res.witness = canonical_graph(best_graph);
  return res;
}

}  // namespace quiver
