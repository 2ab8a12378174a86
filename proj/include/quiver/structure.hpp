#pragma once

// Hereditary and saturated vertex sets, graph homomorphisms, admissible
// inclusions, intersections and unions, and the extended graph.
//
// Infinite bundles count as edges for hereditariness, and their source is
// an infinite emitter, so it never violates saturation.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quiver/error.hpp"
#include "quiver/graph.hpp"

namespace quiver {

//! Sorted vertex indices of one graph.
struct VertexSubset {
  std::vector<std::size_t> members;

  [[nodiscard]] bool contains(std::size_t v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

inline VertexSubset subset_of(const Graph& g, const std::vector<std::string>& names) {
  VertexSubset s;
  for (const auto& n : names) s.members.push_back(g.vertex_index(n));
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  return s;
}

inline std::vector<std::string> subset_names(const Graph& g, const VertexSubset& s) {
  std::vector<std::string> out;
  for (auto v : s.members) out.push_back(g.vertex_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline std::vector<char> mask_of(const Graph& g, const VertexSubset& h) {
  std::vector<char> in(g.vertex_count(), 0);
  for (auto v : h.members) {
    if (v >= g.vertex_count()) fail(ErrorCode::UnknownVertex, "subset member outside the graph");
    in[v] = 1;
  }
  return in;
}

inline bool hereditary_mask(const Graph& g, const std::vector<char>& in) {
  for (const auto& e : g.edges()) {
    if (in[e.src] && !in[e.dst]) return false;
  }
  for (const auto& b : g.bundles()) {
    if (in[b.src] && !in[b.dst]) return false;
  }
  return true;
}

inline bool saturated_mask(const Graph& g, const std::vector<char>& in) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in[v] || g.emits_bundle(v) || g.out_edges(v).empty()) continue;
    bool all_in = std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                              [&](std::size_t e) { return in[g.edge(e).dst] != 0; });
    if (all_in) return false;
  }
  return true;
}

inline std::vector<VertexSubset> subsets_where(const Graph& g, bool need_hereditary, bool need_saturated) {
  const std::size_t n = g.vertex_count();
  if (n > 20) fail(ErrorCode::TooManyVertices, "subset enumeration is limited to 20 vertices");
  std::vector<VertexSubset> out;
  std::vector<char> in(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (std::size_t v = 0; v < n; ++v) in[v] = static_cast<char>(mask >> v & 1);
    if (need_hereditary && !hereditary_mask(g, in)) continue;
    if (need_saturated && !saturated_mask(g, in)) continue;
    VertexSubset s;
    for (std::size_t v = 0; v < n; ++v) {
      if (in[v]) s.members.push_back(v);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSubset& a, const VertexSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}
}  // namespace detail

//! Every edge or bundle leaving H ends in H.
inline bool is_hereditary(const Graph& g, const VertexSubset& h) {
  return detail::hereditary_mask(g, detail::mask_of(g, h));
}

//! No regular vertex outside H sends all its edges into H.
inline bool is_saturated(const Graph& g, const VertexSubset& h) {
  return detail::saturated_mask(g, detail::mask_of(g, h));
}

//! Ordered by size, then lexicographically by vertex index.
inline std::vector<VertexSubset> hereditary_subsets(const Graph& g) { return detail::subsets_where(g, true, false); }
inline std::vector<VertexSubset> saturated_subsets(const Graph& g) { return detail::subsets_where(g, false, true); }
inline std::vector<VertexSubset> hereditary_saturated_subsets(const Graph& g) {
  return detail::subsets_where(g, true, true);
}

//! Removes H and every edge or bundle ending in H.
inline Graph subgraph_from_hereditary(const Graph& g, const VertexSubset& h) {
  auto in = detail::mask_of(g, h);
  if (!detail::hereditary_mask(g, in)) fail(ErrorCode::NotHereditary, "subset is not hereditary");
  std::vector<std::string> vs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) vs.push_back(g.vertex_name(v));
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) {
    if (!in[e.dst]) es.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst)});
  }
  std::vector<BundleSpec> bs;
  for (const auto& b : g.bundles()) {
    if (!in[b.dst]) bs.push_back({g.vertex_name(b.src), g.vertex_name(b.dst)});
  }
  return detail::assemble_from_specs(std::move(vs), es, bs, true);
}

//! One subgraph per hereditary and saturated H, ordered as the subsets.
inline std::vector<Graph> admissible_subgraphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& h : hereditary_saturated_subsets(g)) out.push_back(subgraph_from_hereditary(g, h));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GraphHom {
  std::map<std::string, std::string> f0;  // vertices
  std::map<std::string, std::string> f1;  // edges
};

//! Maps every vertex and edge of `g` to itself.
inline GraphHom identity_hom(const Graph& g) {
  GraphHom h;
  for (const auto& v : g.vertices()) h.f0[v] = v;
  for (const auto& e : g.edges()) h.f1[e.id] = e.id;
  return h;
}

namespace detail {
struct ResolvedHom {
  std::vector<std::size_t> f0;
  std::vector<std::size_t> f1;
};

inline ResolvedHom resolve(const Graph& e, const Graph& f, const GraphHom& hom) {
  ResolvedHom r;
  for (const auto& v : e.vertices()) {
    auto it = hom.f0.find(v);
    if (it == hom.f0.end()) fail(ErrorCode::PartialMap, "f0 misses vertex '" + v + "'");
    r.f0.push_back(f.vertex_index(it->second));
  }
  for (const auto& x : e.edges()) {
    auto it = hom.f1.find(x.id);
    if (it == hom.f1.end()) fail(ErrorCode::PartialMap, "f1 misses edge '" + x.id + "'");
    r.f1.push_back(f.edge_index(it->second));
  }
  return r;
}

inline bool commutes(const Graph& e, const Graph& f, const ResolvedHom& r) {
  for (std::size_t i = 0; i < e.edge_count(); ++i) {
    const auto& src = e.edge(i);
    const auto& img = f.edge(r.f1[i]);
    if (img.src != r.f0[src.src] || img.dst != r.f0[src.dst]) return false;
  }
  for (const auto& b : e.bundles()) {
    Bundle want{r.f0[b.src], r.f0[b.dst]};
    if (std::find(f.bundles().begin(), f.bundles().end(), want) == f.bundles().end()) return false;
  }
  return true;
}
}  // namespace detail

//! s_F f1 = f0 s_E and t_F f1 = f0 t_E; bundles must land on bundles.
inline bool is_graph_homomorphism(const Graph& e, const Graph& f, const GraphHom& hom) {
  return detail::commutes(e, f, detail::resolve(e, f, hom));
}

//! Injective homomorphism whose missing vertex set is hereditary and
//! saturated in F, and whose edge image is exactly the set of F-edges
//! (and bundles) ending in the vertex image.
inline bool is_admissible_inclusion(const Graph& e, const Graph& f, const GraphHom& hom) {
  auto r = detail::resolve(e, f, hom);
  if (std::set<std::size_t>(r.f0.begin(), r.f0.end()).size() != r.f0.size() ||
      std::set<std::size_t>(r.f1.begin(), r.f1.end()).size() != r.f1.size()) {
    fail(ErrorCode::NotInjective, "homomorphism is not injective");
  }
  if (!detail::commutes(e, f, r)) fail(ErrorCode::NotHomomorphism, "maps do not commute with s and t");

  std::vector<char> image(f.vertex_count(), 0);
  for (auto v : r.f0) image[v] = 1;
  std::vector<char> missing(f.vertex_count());
  for (std::size_t v = 0; v < f.vertex_count(); ++v) missing[v] = static_cast<char>(!image[v]);
  if (!detail::hereditary_mask(f, missing) || !detail::saturated_mask(f, missing)) return false;

  std::vector<char> edge_image(f.edge_count(), 0);
  for (auto x : r.f1) edge_image[x] = 1;
  for (std::size_t x = 0; x < f.edge_count(); ++x) {
    if (static_cast<bool>(edge_image[x]) != static_cast<bool>(image[f.edge(x).dst])) return false;
  }
  std::set<std::pair<std::size_t, std::size_t>> bundle_image;
  for (const auto& b : e.bundles()) bundle_image.emplace(r.f0[b.src], r.f0[b.dst]);
  for (const auto& b : f.bundles()) {
    if (static_cast<bool>(bundle_image.count({b.src, b.dst})) != static_cast<bool>(image[b.dst])) return false;
  }
  return true;
}

//! True when every vertex and edge id of `sub` occurs in `g` with the same
//! endpoints (and every bundle of `sub` is a bundle of `g`).
inline bool is_id_subgraph(const Graph& sub, const Graph& g) {
  for (const auto& v : sub.vertices()) {
    if (!g.find_vertex(v)) return false;
  }
  for (const auto& x : sub.edges()) {
    auto y = g.find_edge(x.id);
    if (!y) return false;
    if (g.vertex_name(g.edge(*y).src) != sub.vertex_name(x.src) ||
        g.vertex_name(g.edge(*y).dst) != sub.vertex_name(x.dst)) {
      return false;
    }
  }
  for (const auto& b : sub.bundle_specs()) {
    auto all = g.bundle_specs();
    if (std::find(all.begin(), all.end(), b) == all.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Intersection and union by ids

namespace detail {
inline void check_overlap(const Graph& f, const Graph& g) {
  for (const auto& x : f.edges()) {
    auto y = g.find_edge(x.id);
    if (!y) continue;
    if (f.vertex_name(x.src) != g.vertex_name(g.edge(*y).src) ||
        f.vertex_name(x.dst) != g.vertex_name(g.edge(*y).dst)) {
      fail(ErrorCode::IncompatibleOverlap, "edge '" + x.id + "' has different endpoints in the two graphs");
    }
  }
}
}  // namespace detail

//! Shared vertices (in F's order), shared edges, shared bundles.
inline Graph intersection(const Graph& f, const Graph& g) {
  detail::check_overlap(f, g);
  std::vector<std::string> vs;
  for (const auto& v : f.vertices()) {
    if (g.find_vertex(v)) vs.push_back(v);
  }
  std::vector<EdgeSpec> es;
  for (const auto& x : f.edge_specs()) {
    if (g.find_edge(x.id)) es.push_back(x);
  }
  auto gb = g.bundle_specs();
  std::vector<BundleSpec> bs;
  for (const auto& b : f.bundle_specs()) {
    if (std::find(gb.begin(), gb.end(), b) != gb.end()) bs.push_back(b);
  }
  return detail::assemble_from_specs(std::move(vs), es, bs, true);
}

//! F's vertices and edges, then G's new ones, in order.
inline Graph graph_union(const Graph& f, const Graph& g) {
  detail::check_overlap(f, g);
  std::vector<std::string> vs = f.vertices();
  for (const auto& v : g.vertices()) {
    if (!f.find_vertex(v)) vs.push_back(v);
  }
  auto es = f.edge_specs();
  for (const auto& x : g.edge_specs()) {
    if (!f.find_edge(x.id)) es.push_back(x);
  }
  auto bs = f.bundle_specs();
  for (const auto& b : g.bundle_specs()) {
    if (std::find(bs.begin(), bs.end(), b) == bs.end()) bs.push_back(b);
  }
  return detail::assemble_from_specs(std::move(vs), es, bs, true);
}

//! Both inclusions F∩G -> F and F∩G -> G are admissible.
inline bool is_admissible_intersection(const Graph& f, const Graph& g) {
  auto i = intersection(f, g);
  auto h = identity_hom(i);
  return is_admissible_inclusion(i, f, h) && is_admissible_inclusion(i, g, h);
}

//! Both inclusions F -> F∪G and G -> F∪G are admissible.
inline bool is_admissible_union(const Graph& f, const Graph& g) {
  auto u = graph_union(f, g);
  return is_admissible_inclusion(f, u, identity_hom(f)) && is_admissible_inclusion(g, u, identity_hom(g));
}

// ---------------------------------------------------------------------------

//! Same vertices; every edge e gains a reversed ghost "e*".
inline Graph extended_graph(const Graph& g) {
  detail::require_no_bundles(g, "extended_graph");
  std::vector<Edge> es = g.edges();
  for (const auto& e : g.edges()) {
    if (e.id.find('*') != std::string::npos || g.find_edge(e.id + "*")) {
      fail(ErrorCode::StarIdCollision, "ghost id for '" + e.id + "' collides");
    }
    es.push_back({e.id + "*", e.dst, e.src});
  }
  return detail::assemble(g.vertices(), std::move(es), {}, true);
}

}  // namespace quiver
