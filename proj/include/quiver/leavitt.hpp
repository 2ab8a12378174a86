#pragma once

// Leavitt path algebras over row-finite graphs.
//
// Elements are combinations of reduced monomials p q* (t(p) = t(q)). At each
// regular vertex v the distinguished edge gamma(v) is the last edge leaving v
// in insertion order; a monomial is reduced unless p and q both end in the
// same gamma(v), in which case CK2 rewrites
//   p' g g* q'*  =  p' q'*  -  sum_{e != g, s(e) = v} (p' e)(q' e)*.
//
// Two independent engines compute normal forms: `multiply` composes monomials
// directly, and `reduce` runs a word rewriting system on letters. The test
// suite checks they agree.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quiver/combination.hpp"
#include "quiver/error.hpp"
#include "quiver/expression.hpp"
#include "quiver/graph.hpp"
#include "quiver/linalg.hpp"
#include "quiver/numeric.hpp"
#include "quiver/structure.hpp"

namespace quiver {

//! p q* with t(p) = t(q).
struct Monomial {
  Path p;
  Path q;
  [[nodiscard]] std::size_t degree() const { return p.length() + q.length(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (!(a.p == b.p)) return a.p < b.p;
    return a.q < b.q;
  }
};

template <class Field>
using LeavittElement = Combination<Monomial, Field>;

enum class LetterKind { Vertex, Edge, Ghost };

struct Letter {
  LetterKind kind;
  std::size_t index;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend bool operator<(const Letter& a, const Letter& b) {
    return std::pair(static_cast<int>(a.kind), a.index) < std::pair(static_cast<int>(b.kind), b.index);
  }
};

using Word = std::vector<Letter>;

inline void require_row_finite(const Graph& g) {
  if (g.has_bundles()) fail(ErrorCode::NotRowFinite, "Leavitt algebras need a graph without infinite emitters");
}

//! Last edge leaving v in insertion order; nullopt at sinks.
inline std::optional<std::size_t> distinguished_edge(const Graph& g, std::size_t v) {
  const auto& out = g.out_edges(v);
  if (out.empty()) return std::nullopt;
  return *std::max_element(out.begin(), out.end());
}

inline bool is_reduced(const Graph& g, const Monomial& m) {
  if (m.p.edges.empty() || m.q.edges.empty()) return true;
  auto e = m.p.edges.back();
  return !(e == m.q.edges.back() && distinguished_edge(g, g.edge(e).src) == e);
}

namespace detail {

inline Path drop_last(const Graph& g, const Path& p) {
  Path r = p;
  r.edges.pop_back();
  if (r.edges.empty()) r.base = g.edge(p.edges.back()).src;
  return r;
}

inline Path append_edge(const Path& p, std::size_t e, const Graph& g) {
  Path r = p;
  if (r.edges.empty()) r.base = g.edge(e).src;
  r.edges.push_back(e);
  return r;
}

// Adds c * (p q*) in reduced form.
template <class Field>
void add_normalized(const Graph& g, Monomial m, Field c, std::map<Monomial, Field>& out) {
  while (!is_reduced(g, m)) {
    auto gamma = m.p.edges.back();
    auto v = g.edge(gamma).src;
    Path p0 = drop_last(g, m.p), q0 = drop_last(g, m.q);
    for (auto e : g.out_edges(v)) {
      if (e == gamma) continue;
      Monomial side{append_edge(p0, e, g), append_edge(q0, e, g)};
      auto [it, ins] = out.emplace(side, -c);
      if (!ins) {
        it->second -= c;
        if (it->second == Field(0)) out.erase(it);
      }
    }
    m = Monomial{p0, q0};
  }
  auto [it, ins] = out.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == Field(0)) out.erase(it);
  }
}

// (p1 q1*)(p2 q2*) before normalization; nullopt when zero.
inline std::optional<Monomial> raw_product(const Graph& g, const Monomial& a, const Monomial& b) {
  if (path_source(g, a.q) != path_source(g, b.p)) return std::nullopt;
  const auto& q = a.q.edges;
  const auto& r = b.p.edges;
  std::size_t n = std::min(q.size(), r.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i] != r[i]) return std::nullopt;
  }
  if (q.size() <= r.size()) {
    // q1* p2 = rest of p2
    Monomial m{a.p, b.q};
    for (std::size_t i = q.size(); i < r.size(); ++i) m.p = append_edge(m.p, r[i], g);
    return m;
  }
  Monomial m{a.p, b.q};
  for (std::size_t i = r.size(); i < q.size(); ++i) m.q = append_edge(m.q, q[i], g);
  return m;
}

}  // namespace detail

template <class Field>
LeavittElement<Field> leavitt_monomial(std::shared_ptr<const Graph> g, const Monomial& m,
                                       const Field& c = Field(1)) {
  if (path_target(*g, m.p) != path_target(*g, m.q)) fail(ErrorCode::InvalidWord, "monomial with t(p) != t(q)");
  LeavittElement<Field> x(g);
  detail::add_normalized(*g, m, c, x.terms);
  return x;
}

inline Monomial letter_monomial(const Graph& g, const Letter& l) {
  switch (l.kind) {
    case LetterKind::Vertex: return {vertex_path(l.index), vertex_path(l.index)};
    case LetterKind::Edge: return {Path{g.edge(l.index).src, {l.index}}, vertex_path(g.edge(l.index).dst)};
    case LetterKind::Ghost: return {vertex_path(g.edge(l.index).dst), Path{g.edge(l.index).src, {l.index}}};
  }
  return {};
}

template <class Field>
LeavittElement<Field> multiply(const LeavittElement<Field>& x, const LeavittElement<Field>& y) {
  x.check_same(y);
  LeavittElement<Field> out(x.graph);
  for (const auto& [a, ca] : x.terms) {
    for (const auto& [b, cb] : y.terms) {
      if (auto m = detail::raw_product(*x.graph, a, b)) detail::add_normalized(*x.graph, *m, ca * cb, out.terms);
    }
  }
  return out;
}

template <class Field>
LeavittElement<Field> leavitt_unit(std::shared_ptr<const Graph> g) {
  require_row_finite(*g);
  LeavittElement<Field> one(g);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) one.add({vertex_path(v), vertex_path(v)}, Field(1));
  return one;
}

// ---------------------------------------------------------------------------
// Words and text

//! Tokens are vertex names, edge ids, or "e*" for the ghost of edge e.
inline Letter parse_letter(const Graph& g, const std::string& tok) {
  if (tok.size() > 1 && tok.back() == '*') {
    auto e = g.find_edge(tok.substr(0, tok.size() - 1));
    if (!e) fail(ErrorCode::InvalidWord, "unknown ghost letter '" + tok + "'");
    return {LetterKind::Ghost, *e};
  }
  auto e = g.find_edge(tok);
  auto v = g.find_vertex(tok);
  if (e && v) fail(ErrorCode::InvalidWord, "'" + tok + "' names both a vertex and an edge");
  if (e) return {LetterKind::Edge, *e};
  if (v) return {LetterKind::Vertex, *v};
  fail(ErrorCode::InvalidWord, "unknown letter '" + tok + "'");
}

template <class Field>
using WordCombination = std::vector<std::pair<Field, Word>>;

template <class Field>
WordCombination<Field> parse_words(const Graph& g, const std::string& text) {
  WordCombination<Field> out;
  for (const auto& t : parse_expression(text)) {
    Word w;
    for (const auto& tok : t.letters) w.push_back(parse_letter(g, tok));
    out.emplace_back(FieldTraits<Field>::parse(t.coeff), std::move(w));
  }
  return out;
}

//! Product of the letters of each word, via monomial composition.
template <class Field>
LeavittElement<Field> evaluate(std::shared_ptr<const Graph> g, const WordCombination<Field>& words) {
  require_row_finite(*g);
  LeavittElement<Field> out(g);
  for (const auto& [c, w] : words) {
    if (w.empty()) fail(ErrorCode::InvalidWord, "empty word");
    auto acc = leavitt_monomial<Field>(g, letter_monomial(*g, w.front()), c);
    for (std::size_t i = 1; i < w.size(); ++i) acc = multiply(acc, leavitt_monomial<Field>(g, letter_monomial(*g, w[i])));
    out += acc;
  }
  return out;
}

template <class Field>
LeavittElement<Field> parse_leavitt_element(std::shared_ptr<const Graph> g, const std::string& text) {
  return evaluate(g, parse_words<Field>(*g, text));
}

//! Edges of p then ghosts of q reversed; a vertex prints as its name.
inline std::string monomial_to_string(const Graph& g, const Monomial& m) {
  if (m.p.edges.empty() && m.q.edges.empty()) return g.vertex_name(m.p.base);
  std::string s;
  for (auto e : m.p.edges) s += (s.empty() ? "" : " ") + g.edge(e).id;
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) s += (s.empty() ? "" : " ") + g.edge(*it).id + "*";
  return s;
}

template <class Field>
std::string to_string(const LeavittElement<Field>& x) {
  if (x.is_zero()) return "0";
  const Graph& g = *x.graph;
  std::vector<std::pair<Monomial, Field>> items(x.terms.begin(), x.terms.end());
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    const auto &ma = a.first, &mb = b.first;
    if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
    if (path_display_less(g, ma.p, mb.p)) return true;
    if (path_display_less(g, mb.p, ma.p)) return false;
    return path_display_less(g, ma.q, mb.q);
  });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string s = FieldTraits<Field>::str(items[i].second);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    out += i == 0 ? (neg ? "- " : "") : (neg ? " - " : " + ");
    if (s != "1") out += s + " ";
    out += monomial_to_string(g, items[i].first);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word rewriting engine

enum class RewriteOrder { LeftmostInnermost, Random };

struct RewriteConfig {
  RewriteOrder order = RewriteOrder::LeftmostInnermost;
  std::uint64_t seed = 0;
  std::size_t step_budget = 1'000'000;
};

namespace detail {

// Replacement for the letter pair (a, b): nullopt if the pair is not a
// redex; an empty list means zero; otherwise signed replacement words.
inline std::optional<std::vector<std::pair<int, Word>>> rewrite_pair(const Graph& g, const Letter& a,
                                                                     const Letter& b) {
  using K = LetterKind;
  using Out = std::vector<std::pair<int, Word>>;
  auto one = [](Letter l) { return Out{{1, Word{l}}}; };
  // source and target of a letter in the extended graph
  auto src = [&](const Letter& l) {
    return l.kind == K::Vertex ? l.index : l.kind == K::Edge ? g.edge(l.index).src : g.edge(l.index).dst;
  };
  auto tgt = [&](const Letter& l) {
    return l.kind == K::Vertex ? l.index : l.kind == K::Edge ? g.edge(l.index).dst : g.edge(l.index).src;
  };
  if (a.kind == K::Vertex) return tgt(a) == src(b) ? one(b) : Out{};
  if (b.kind == K::Vertex) return tgt(a) == src(b) ? one(a) : Out{};
  if (tgt(a) != src(b)) return Out{};
  if (a.kind == K::Ghost && b.kind == K::Edge) {
    // CK1: e* f = delta_ef t(e); the endpoint check above already covers s(e) != s(f)
    if (a.index != b.index) return Out{};
    return one(Letter{K::Vertex, g.edge(a.index).dst});
  }
  if (a.kind == K::Edge && b.kind == K::Ghost && a.index == b.index) {
    auto v = g.edge(a.index).src;
    if (distinguished_edge(g, v) != a.index) return std::nullopt;
    Out out{{1, Word{Letter{K::Vertex, v}}}};
    for (auto e : g.out_edges(v)) {
      if (e != a.index) out.push_back({-1, Word{Letter{K::Edge, e}, Letter{K::Ghost, e}}});
    }
    return out;
  }
  return std::nullopt;
}

inline Monomial word_to_monomial(const Graph& g, const Word& w) {
  if (w.size() == 1 && w[0].kind == LetterKind::Vertex) return {vertex_path(w[0].index), vertex_path(w[0].index)};
  Monomial m;
  std::vector<std::size_t> ghosts;
  for (const auto& l : w) {
    if (l.kind == LetterKind::Edge) {
      m.p.edges.push_back(l.index);
    } else if (l.kind == LetterKind::Ghost) {
      ghosts.push_back(l.index);
    } else {
      fail(ErrorCode::InvalidWord, "vertex letter left inside an irreducible word");
    }
  }
  m.q.edges.assign(ghosts.rbegin(), ghosts.rend());
  std::size_t end = m.p.edges.empty() ? g.edge(m.q.edges.back()).dst : g.edge(m.p.edges.back()).dst;
  m.p.base = m.p.edges.empty() ? end : g.edge(m.p.edges.front()).src;
  m.q.base = m.q.edges.empty() ? end : g.edge(m.q.edges.front()).src;
  return m;
}

}  // namespace detail

struct RewriteStats {
  std::size_t steps = 0;
};

//! Normal form by rewriting: vertex absorption, mismatched neighbours to
//! zero, CK1 (e* f -> delta_ef t(e)) and CK2 oriented to remove
//! gamma(v) gamma(v)*. Exhausting the step budget is an error.
template <class Field>
LeavittElement<Field> reduce(std::shared_ptr<const Graph> g, const WordCombination<Field>& words,
                             const RewriteConfig& cfg = {}, RewriteStats* stats = nullptr) {
  require_row_finite(*g);
  std::map<Word, Field> pending, done;
  auto bump = [](std::map<Word, Field>& m, const Word& w, const Field& c) {
    if (c == Field(0)) return;
    auto [it, ins] = m.emplace(w, c);
    if (!ins) {
      it->second += c;
      if (it->second == Field(0)) m.erase(it);
    }
  };
  for (const auto& [c, w] : words) {
    if (w.empty()) fail(ErrorCode::InvalidWord, "empty word");
    bump(pending, w, c);
  }
  std::mt19937_64 rng(cfg.seed);
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (cfg.order == RewriteOrder::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
    }
    Word w = it->first;
    Field c = it->second;
    pending.erase(it);

    std::vector<std::pair<std::size_t, std::vector<std::pair<int, Word>>>> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (auto r = detail::rewrite_pair(*g, w[i], w[i + 1])) {
        redexes.emplace_back(i, std::move(*r));
        if (cfg.order == RewriteOrder::LeftmostInnermost) break;
      }
    }
    if (redexes.empty()) {
      bump(done, w, c);
      continue;
    }
    if (++steps > cfg.step_budget) fail(ErrorCode::BudgetExceeded, "rewriting step budget exhausted");
    std::size_t choice = 0;
    if (cfg.order == RewriteOrder::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      choice = pick(rng);
    }
    const auto& [pos, repl] = redexes[choice];
    for (const auto& [sign, mid] : repl) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      bump(pending, nw, sign > 0 ? c : -c);
    }
  }
  if (stats) stats->steps = steps;
  LeavittElement<Field> out(g);
  for (const auto& [w, c] : done) out.add(detail::word_to_monomial(*g, w), c);
  return out;
}

// ---------------------------------------------------------------------------
// Bases and dimension

//! Reduced monomials, all of them when the graph is loop-free, otherwise
//! those with |p| + |q| <= max_degree. Ordered by degree.
inline std::vector<Monomial> reduced_basis(const Graph& g, std::optional<std::size_t> max_degree = std::nullopt) {
  require_row_finite(g);
  if (!max_degree && has_loop(g)) fail(ErrorCode::InvalidRange, "infinite basis needs a degree bound");
  std::size_t bound = max_degree.value_or(g.vertex_count());
  std::vector<std::vector<Path>> ending(g.vertex_count());
  for (std::size_t k = 0; k <= bound; ++k) {
    auto layer = enumerate_paths(g, k);
    if (layer.empty()) break;
    for (auto& p : layer) ending[path_target(g, p)].push_back(std::move(p));
  }
  std::vector<Monomial> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto& p : ending[v]) {
      for (const auto& q : ending[v]) {
        Monomial m{p, q};
        if ((!max_degree || m.degree() <= bound) && is_reduced(g, m)) out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

//! Number of reduced monomials when finite (loop-free), nullopt otherwise.
inline std::optional<BigInt> dimension_if_finite(const Graph& g) {
  require_row_finite(g);
  if (has_loop(g)) return std::nullopt;
  return BigInt(reduced_basis(g).size());
}

// ---------------------------------------------------------------------------
// Quotient by the ideal of a hereditary saturated set

//! The map L(F) -> L(E) of an admissible subgraph E of F (matched by ids):
//! letters of E go to themselves, everything else to zero.
template <class Field>
class QuotientMap {
 public:
  QuotientMap(std::shared_ptr<const Graph> f, std::shared_ptr<const Graph> e) : f_(std::move(f)), e_(std::move(e)) {
    require_row_finite(*f_);
    require_row_finite(*e_);
    if (!is_id_subgraph(*e_, *f_) || !is_admissible_inclusion(*e_, *f_, identity_hom(*e_))) {
      fail(ErrorCode::NotAdmissible, "subgraph is not an admissible subgraph");
    }
    vmap_.assign(f_->vertex_count(), std::nullopt);
    emap_.assign(f_->edge_count(), std::nullopt);
    for (std::size_t v = 0; v < f_->vertex_count(); ++v) {
      if (auto w = e_->find_vertex(f_->vertex_name(v))) vmap_[v] = *w;
    }
    for (std::size_t x = 0; x < f_->edge_count(); ++x) {
      if (auto y = e_->find_edge(f_->edge(x).id)) emap_[x] = *y;
    }
  }

  [[nodiscard]] const std::shared_ptr<const Graph>& source() const { return f_; }
  [[nodiscard]] const std::shared_ptr<const Graph>& target() const { return e_; }

  LeavittElement<Field> operator()(const LeavittElement<Field>& x) const {
    if (!LeavittElement<Field>::same_graph(x.graph, f_)) fail(ErrorCode::GraphMismatch, "element is not over F");
    LeavittElement<Field> out(e_);
    for (const auto& [m, c] : x.terms) {
      auto p = translate(m.p), q = translate(m.q);
      if (p && q) detail::add_normalized(*e_, Monomial{*p, *q}, c, out.terms);
    }
    return out;
  }

 private:
  std::optional<Path> translate(const Path& p) const {
    Path r;
    if (!vmap_[p.base]) return std::nullopt;
    r.base = *vmap_[p.base];
    for (auto x : p.edges) {
      if (!emap_[x]) return std::nullopt;
      r.edges.push_back(*emap_[x]);
    }
    return r;
  }

  std::shared_ptr<const Graph> f_, e_;
  std::vector<std::optional<std::size_t>> vmap_, emap_;
};

template <class Field>
LeavittElement<Field> quotient_map(std::shared_ptr<const Graph> f, std::shared_ptr<const Graph> e,
                                   const LeavittElement<Field>& x) {
  return QuotientMap<Field>(std::move(f), std::move(e))(x);
}

//! x lies in the ideal generated by the vertices of F outside E.
template <class Field>
bool in_vertex_ideal(std::shared_ptr<const Graph> f, std::shared_ptr<const Graph> e, const LeavittElement<Field>& x) {
  return quotient_map(std::move(f), std::move(e), x).is_zero();
}

// ---------------------------------------------------------------------------
// Pullback check

struct PullbackDims {
  BigInt union_dim, f1_dim, f2_dim, intersection_dim, pullback_dim;
};

struct PullbackReport {
  bool compatible = true;
  bool injective = true;
  bool surjective = true;          // exact when finite, generator evidence otherwise
  bool evidence_only = false;      // true when the algebras are infinite-dimensional
  std::optional<PullbackDims> dims;
  std::size_t filtration_degree = 0;
  std::vector<std::string> witnesses;

  [[nodiscard]] bool passed() const { return compatible && injective && surjective; }
};

namespace detail {
template <class Field>
std::vector<Field> coordinates(const LeavittElement<Field>& x, const std::map<Monomial, std::size_t>& index,
                               std::size_t offset, std::vector<Field> row) {
  for (const auto& [m, c] : x.terms) {
    auto it = index.find(m);
    if (it == index.end()) fail(ErrorCode::InvalidRange, "image escapes the truncated basis");
    row[offset + it->second] = c;
  }
  return row;
}

inline std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& b) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
  return idx;
}
}  // namespace detail

//! Checks that L(F1 ∪ F2) maps isomorphically onto the pullback of
//! L(F1) -> L(F1 ∩ F2) <- L(F2). Exact by linear algebra when everything is
//! finite-dimensional; otherwise restricted to monomials of degree <= degree
//! and labelled as evidence.
template <class Field = Rational>
PullbackReport pullback_check(const Graph& f1g, const Graph& f2g, std::size_t degree = 4) {
  require_row_finite(f1g);
  require_row_finite(f2g);
  if (!is_admissible_intersection(f1g, f2g)) {
    fail(ErrorCode::NotAdmissibleIntersection, "F1 ∩ F2 is not admissible in both graphs");
  }
  auto f1 = std::make_shared<const Graph>(f1g);
  auto f2 = std::make_shared<const Graph>(f2g);
  auto in = std::make_shared<const Graph>(intersection(f1g, f2g));
  auto un = std::make_shared<const Graph>(graph_union(f1g, f2g));
  QuotientMap<Field> p1(un, f1), p2(un, f2), pi1(f1, in), pi2(f2, in);

  PullbackReport rep;
  rep.evidence_only = has_loop(*un);
  rep.filtration_degree = rep.evidence_only ? degree : 0;
  std::optional<std::size_t> bound;
  if (rep.evidence_only) bound = degree;

  auto bu = reduced_basis(*un, bound);
  auto b1 = reduced_basis(*f1, bound), b2 = reduced_basis(*f2, bound), be = reduced_basis(*in, bound);
  auto i1 = detail::index_of(b1), i2 = detail::index_of(b2), ie = detail::index_of(be);

  std::vector<std::vector<Field>> phi;
  for (const auto& m : bu) {
    auto x = leavitt_monomial<Field>(un, m);
    auto y1 = p1(x), y2 = p2(x);
    if (pi1(y1) != pi2(y2)) {
      rep.compatible = false;
      if (rep.witnesses.size() < 8) rep.witnesses.push_back("incompatible on " + monomial_to_string(*un, m));
    }
    std::vector<Field> row(b1.size() + b2.size(), Field(0));
    row = detail::coordinates(y1, i1, 0, std::move(row));
    row = detail::coordinates(y2, i2, b1.size(), std::move(row));
    phi.push_back(std::move(row));
  }
  rep.injective = matrix_rank(phi) == bu.size();
  if (!rep.injective) rep.witnesses.push_back("map into L(F1) ⊕ L(F2) has a kernel");

  if (!rep.evidence_only) {
    // P = ker [pi1 | -pi2] on L(F1) ⊕ L(F2)
    std::vector<std::vector<Field>> m;
    for (const auto& x : b1) {
      std::vector<Field> row(be.size(), Field(0));
      m.push_back(detail::coordinates(pi1(leavitt_monomial<Field>(f1, x)), ie, 0, std::move(row)));
    }
    for (const auto& x : b2) {
      std::vector<Field> row(be.size(), Field(0));
      auto img = pi2(leavitt_monomial<Field>(f2, x)).scaled(Field(-1));
      m.push_back(detail::coordinates(img, ie, 0, std::move(row)));
    }
    std::size_t r = matrix_rank(m);
    PullbackDims d;
    d.union_dim = bu.size();
    d.f1_dim = b1.size();
    d.f2_dim = b2.size();
    d.intersection_dim = be.size();
    d.pullback_dim = BigInt(b1.size() + b2.size() - r);
    rep.surjective = d.union_dim == d.pullback_dim;
    if (!rep.surjective) rep.witnesses.push_back("dim L(F1 ∪ F2) differs from the pullback dimension");
    rep.dims = d;
  } else {
    // every generator of L(Fi) is the image of the same generator of the union
    auto hits = [&](const std::shared_ptr<const Graph>& fi, const QuotientMap<Field>& pi) {
      bool ok = true;
      for (std::size_t v = 0; v < fi->vertex_count(); ++v) {
        Letter l{LetterKind::Vertex, un->vertex_index(fi->vertex_name(v))};
        ok = ok && pi(leavitt_monomial<Field>(un, letter_monomial(*un, l))) ==
                       leavitt_monomial<Field>(fi, letter_monomial(*fi, {LetterKind::Vertex, v}));
      }
      for (std::size_t x = 0; x < fi->edge_count(); ++x) {
        for (auto kind : {LetterKind::Edge, LetterKind::Ghost}) {
          Letter l{kind, un->edge_index(fi->edge(x).id)};
          ok = ok && pi(leavitt_monomial<Field>(un, letter_monomial(*un, l))) ==
                         leavitt_monomial<Field>(fi, letter_monomial(*fi, {kind, x}));
        }
      }
      return ok;
    };
    rep.surjective = hits(f1, p1) && hits(f2, p2);
    if (!rep.surjective) rep.witnesses.push_back("a generator of L(Fi) is missed");
  }
  return rep;
}

}  // namespace quiver
