#pragma once

#include <map>
#include <memory>
#include <string>

#include "quiver/error.hpp"
#include "quiver/graph.hpp"
#include "quiver/numeric.hpp"

namespace quiver {

//! Finite linear combination of basis keys over a field, tied to one graph.
//! Zero coefficients are never stored.
template <class Key, class Field>
struct Combination {
  std::shared_ptr<const Graph> graph;
  std::map<Key, Field> terms;

  Combination() = default;
  explicit Combination(std::shared_ptr<const Graph> g) : graph(std::move(g)) {}

  [[nodiscard]] bool is_zero() const { return terms.empty(); }

  void add(const Key& k, const Field& c) {
    if (c == Field(0)) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Field(0)) terms.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

  [[nodiscard]] Combination scaled(const Field& s) const {
    Combination out(graph);
    for (const auto& [k, c] : terms) out.add(k, c * s);
    return out;
  }

  void check_same(const Combination& o) const {
    if (!same_graph(graph, o.graph)) fail(ErrorCode::GraphMismatch, "elements live over different graphs");
  }

  static bool same_graph(const std::shared_ptr<const Graph>& a, const std::shared_ptr<const Graph>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
  }

  friend bool operator==(const Combination& a, const Combination& b) {
    return same_graph(a.graph, b.graph) && a.terms == b.terms;
  }
  friend bool operator!=(const Combination& a, const Combination& b) { return !(a == b); }
};

}  // namespace quiver
