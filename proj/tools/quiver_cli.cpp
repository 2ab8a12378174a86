// quiver: batch front end over the header library.
//
// Exit codes: 0 ok, 2 parse error, 3 engine disagreement, 4 certificate
// failure, 5 precondition violated.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quiver/quiver.hpp"

namespace {

using namespace quiver;

constexpr int kExitParse = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitCertificate = 4;
constexpr int kExitPrecondition = 5;

struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string graph, graph2, out, engine = "both", to = "json", trace_out, x, y, mode = "inclusion";
  std::size_t k = 0, n = 0, cap = 0, filtration = 4, restarts = 50, iterations = 3000, max_dim = 6, budget = 0;
  std::uint64_t seed = 1;
  double real_n = 0;
  bool connected = false, dot = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Exit{kExitParse, "cannot write '" + o.out + "'"};
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string dump(const Json& j) { return j.dump(2); }

std::shared_ptr<const Graph> shared_graph(const std::string& path) {
  return std::make_shared<const Graph>(load_graph(path));
}

std::string real_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// --- count / enum / bound ------------------------------------------------------

void cmd_count(const Options& o) {
  auto g = load_graph(o.graph);
  if (o.engine != "matrix" && o.engine != "dfs" && o.engine != "both") {
    throw Exit{kExitParse, "engine must be matrix, dfs or both"};
  }
  std::optional<BigInt> m, d;
  if (o.engine != "dfs") m = count_paths_matrix(g, o.k);
  if (o.engine != "matrix") d = count_paths_bruteforce(g, o.k);
  if (m && d && *m != *d) throw Exit{kExitDisagree, "matrix " + m->str() + " != dfs " + d->str()};
  emit(o, (m ? *m : *d).str());
}

void cmd_enum(const Options& o) {
  auto g = load_graph(o.graph);
  auto paths = enumerate_paths(g, o.k, o.cap ? o.cap : kDefaultPathCap);
  Json a = Json::array();
  for (const auto& p : paths) a.push_back(path_to_json(g, p));
  emit(o, dump(a));
}

std::string bound_line(std::size_t N, std::size_t k) {
  auto d = bound_decomposition(N, k);
  std::string rhs;
  auto factor = [&](std::size_t base, std::size_t exp) {
    if (exp == 0) return;
    if (!rhs.empty()) rhs += " * ";
    rhs += std::to_string(base) + "^" + std::to_string(exp);
  };
  factor(d.n + 1, d.r);
  factor(d.n, k - d.r);
  return d.value.str() + " = " + rhs + "\n" + std::to_string(N) + " = " + std::to_string(d.n) + "*" + std::to_string(k) +
         " + " + std::to_string(d.r);
}

void cmd_bound(const Options& o) { emit(o, bound_line(o.n, o.k)); }

// --- maximize / search ----------------------------------------------------------

int cmd_maximize(const Options& o) {
  auto g = load_graph(o.graph);
  auto trace = maximize_with_trace(g, o.k);
  auto cert = verify_trace(trace);
  if (!o.trace_out.empty()) {
    std::ofstream f(o.trace_out);
    if (!f) throw Exit{kExitParse, "cannot write '" + o.trace_out + "'"};
    f << (o.dot ? trace_to_dot(trace) : dump(trace_to_json(trace)) + "\n");
  }
  Json j;
  j["k"] = o.k;
  j["edges"] = g.edge_count();
  j["initial"] = trace.steps.front().count.str();
  j["final"] = trace.steps.back().count.str();
  j["bound"] = optimal_bound(g.edge_count(), o.k).str();
  j["steps"] = trace.steps.size();
  j["certificate"] = {{"monotone", cert.monotone},
                      {"loop_free", cert.loop_free},
                      {"edge_count_invariant", cert.edge_count_invariant},
                      {"counts_match", cert.counts_match},
                      {"final_optimal", cert.final_optimal}};
  if (!cert.detail.empty()) j["certificate"]["detail"] = cert.detail;
  j["final_graph"] = graph_to_json(trace.steps.back().snapshot);
  emit(o, dump(j));
  return cert.ok() ? 0 : kExitCertificate;
}

void cmd_search(const Options& o) {
  auto r = brute_force_max(o.n, o.k, o.cap, o.budget ? o.budget : kDefaultSearchBudget);
  Json j;
  j["n"] = o.n;
  j["k"] = o.k;
  j["max"] = r.value.str();
  j["bound"] = optimal_bound(o.n, o.k).str();
  j["graphs_examined"] = r.graphs_examined;
  j["witness"] = graph_to_json(r.witness);
  emit(o, dump(j));
}

// --- structure --------------------------------------------------------------------

void cmd_analyze(const Options& o) { emit(o, dump(structure_report(load_graph(o.graph)))); }

void cmd_admissible(const Options& o) {
  auto f = load_graph(o.graph), g = load_graph(o.graph2);
  Json j;
  j["mode"] = o.mode;
  if (o.mode == "inclusion") {
    j["admissible"] = is_id_subgraph(f, g) && is_admissible_inclusion(f, g, identity_hom(f));
  } else if (o.mode == "intersection") {
    j["admissible"] = is_admissible_intersection(f, g);
    j["intersection"] = graph_to_json(intersection(f, g));
  } else if (o.mode == "union") {
    j["admissible"] = is_admissible_union(f, g);
    j["union"] = graph_to_json(graph_union(f, g));
  } else {
    throw Exit{kExitParse, "mode must be inclusion, intersection or union"};
  }
  emit(o, dump(j));
}

// --- path algebra -------------------------------------------------------------------

void cmd_algebra_dim(const Options& o) {
  auto d = dimension(load_graph(o.graph));
  emit(o, d ? d->str() : "infinite");
}

void cmd_algebra_mul(const Options& o) {
  auto g = shared_graph(o.graph);
  auto x = parse_path_element<Rational>(g, o.x), y = parse_path_element<Rational>(g, o.y);
  emit(o, to_string(multiply(x, y)));
}

void cmd_algebra_unit(const Options& o) {
  auto g = shared_graph(o.graph);
  auto u = unit<Rational>(g);
  emit(o, u ? to_string(*u) : "none");
}

void cmd_algebra_commutative(const Options& o) { emit(o, is_commutative(load_graph(o.graph)) ? "true" : "false"); }

void cmd_algebra_idempotent(const Options& o) {
  auto g = shared_graph(o.graph);
  emit(o, is_idempotent(parse_path_element<Rational>(g, o.x)) ? "true" : "false");
}

void cmd_algebra_enum_dim(const Options& o) {
  auto gs = enumerate_graphs_with_dim(o.n, o.connected, o.budget ? o.budget : kDefaultDimBudget);
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(graph_to_json(g));
  emit(o, dump(a));
}

// --- Leavitt ---------------------------------------------------------------------------

int cmd_leavitt_reduce(const Options& o) {
  auto g = shared_graph(o.graph);
  auto words = parse_words<Rational>(*g, o.x);
  if (o.engine != "product" && o.engine != "rewrite" && o.engine != "both") {
    throw Exit{kExitParse, "engine must be product, rewrite or both"};
  }
  std::optional<LeavittElement<Rational>> a, b;
  if (o.engine != "rewrite") a = evaluate(g, words);
  if (o.engine != "product") {
    RewriteConfig cfg;
    cfg.order = o.seed == 0 ? RewriteOrder::LeftmostInnermost : RewriteOrder::Random;
    cfg.seed = o.seed;
    b = reduce(g, words, cfg);
  }
  if (a && b && *a != *b) {
    std::cerr << "product: " << to_string(*a) << "\nrewrite: " << to_string(*b) << "\n";
    return kExitDisagree;
  }
  emit(o, to_string(a ? *a : *b));
  return 0;
}

void cmd_leavitt_mul(const Options& o) {
  auto g = shared_graph(o.graph);
  emit(o, to_string(multiply(parse_leavitt_element<Rational>(g, o.x), parse_leavitt_element<Rational>(g, o.y))));
}

void cmd_leavitt_dim(const Options& o) {
  auto d = dimension_if_finite(load_graph(o.graph));
  emit(o, d ? d->str() : "infinite");
}

void cmd_leavitt_quotient(const Options& o) {
  auto f = shared_graph(o.graph), e = shared_graph(o.graph2);
  emit(o, to_string(quotient_map(f, e, parse_leavitt_element<Rational>(f, o.x))));
}

int cmd_leavitt_pullback(const Options& o) {
  auto r = pullback_check<Rational>(load_graph(o.graph), load_graph(o.graph2), o.filtration);
  emit(o, dump(pullback_report_to_json(r)));
  return r.passed() ? 0 : kExitCertificate;
}

// --- matrices -------------------------------------------------------------------------

//! Accepts either a graph or a matrix document.
CountMatrix load_matrix(const std::string& path) {
  auto j = parse_json_text(read_file(path));
  if (j.is_object() && j.contains("rows")) return matrix_from_json(j);
  return adjacency_matrix(graph_from_json(j));
}

void cmd_matrix_power(const Options& o) { emit(o, dump(matrix_to_json(mat_pow(load_matrix(o.graph), o.k)))); }

void cmd_matrix_nilpotent(const Options& o) {
  auto idx = is_nilpotent(load_matrix(o.graph));
  Json j;
  j["nilpotent"] = idx.has_value();
  j["index"] = idx ? Json(std::to_string(*idx)) : Json(nullptr);
  emit(o, dump(j));
}

// --- relaxation -------------------------------------------------------------------------

void cmd_conjecture(const Options& o) {
  RelaxConfig cfg;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.iterations = o.iterations;
  cfg.max_dim = o.max_dim;
  auto r = explore_real_relaxation(o.real_n, o.k, cfg);
  double target = std::pow(o.real_n / static_cast<double>(o.k), static_cast<double>(o.k));
  Json j;
  j["n"] = real_str(o.real_n);
  j["k"] = o.k;
  j["target"] = real_str(target);
  j["best"] = real_str(r.value);
  j["exceeds_target"] = r.value > target + 1e-9;
  Json runs = Json::array();
  for (double v : r.run_values) runs.push_back(real_str(v));
  j["runs"] = runs;
  Json m = Json::array();
  for (const auto& row : r.argmax) {
    Json jr = Json::array();
    for (double x : row) jr.push_back(real_str(x));
    m.push_back(jr);
  }
  j["argmax"] = m;
  emit(o, dump(j));
}

// --- convert ---------------------------------------------------------------------------

void cmd_convert(const Options& o) {
  auto j = parse_json_text(read_file(o.graph));
  bool is_trace = j.is_object() && j.contains("steps");
  if (o.to == "dot") {
    emit(o, is_trace ? trace_to_dot(trace_from_json(j)) : graph_to_dot(graph_from_json(j)));
  } else if (o.to == "json") {
    emit(o, dump(is_trace ? trace_to_json(trace_from_json(j)) : graph_to_json(graph_from_json(j))));
  } else {
    throw Exit{kExitParse, "--to must be dot or json"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path counting, extremal reshaping and graph algebras for directed multigraphs"};
  app.require_subcommand(1);
  Options o;
  int status = 0;
  std::function<int()> action;

  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--out", o.out, "write output to a file"); };
  auto graph_opt = [&](CLI::App* c) { c->add_option("graph,--graph", o.graph, "graph JSON file")->required(); };
  auto k_opt = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("k,--k", o.k, "path length");
    if (required) opt->required();
  };
  auto bind = [&](CLI::App* c, auto fn) {
    out_opt(c);
    c->callback([&, fn] {
      action = [&, fn]() -> int {
        if constexpr (std::is_same_v<decltype(fn(o)), int>) {
          return fn(o);
        } else {
          fn(o);
          return 0;
        }
      };
    });
  };

  auto* count = app.add_subcommand("count", "count paths of length k");
  graph_opt(count);
  k_opt(count);
  count->add_option("--engine", o.engine, "matrix, dfs or both")->capture_default_str();
  bind(count, cmd_count);

  auto* en = app.add_subcommand("enum", "list paths of length k");
  graph_opt(en);
  k_opt(en);
  en->add_option("--cap", o.cap, "result cap");
  bind(en, cmd_enum);

  auto* bound = app.add_subcommand("bound", "optimal k-path bound for N edges");
  bound->add_option("n,--n", o.n, "edge count")->required();
  k_opt(bound);
  bind(bound, cmd_bound);

  auto* maximize = app.add_subcommand("maximize", "reshape a loop-free graph into a maximizer");
  graph_opt(maximize);
  k_opt(maximize);
  maximize->add_option("--trace-out", o.trace_out, "write the trace here");
  maximize->add_flag("--dot", o.dot, "write the trace as a DOT sequence");
  bind(maximize, cmd_maximize);

  auto* search = app.add_subcommand("search", "exhaustive maximum over small graphs");
  search->add_option("n,--n", o.n, "edge count")->required();
  k_opt(search);
  search->add_option("--cap", o.cap, "vertex cap (default 2N)");
  search->add_option("--budget", o.budget, "graph budget");
  bind(search, cmd_search);

  auto* analyze = app.add_subcommand("analyze", "hereditary and saturated subsets, admissible subgraphs");
  graph_opt(analyze);
  bind(analyze, cmd_analyze);

  auto* adm = app.add_subcommand("admissible", "admissibility of an inclusion, intersection or union");
  graph_opt(adm);
  adm->add_option("other,--other", o.graph2, "second graph JSON file")->required();
  adm->add_option("--mode", o.mode, "inclusion (first inside second), intersection or union")->capture_default_str();
  bind(adm, cmd_admissible);

  auto* alg = app.add_subcommand("algebra", "path algebra operations");
  alg->require_subcommand(1);
  auto* adim = alg->add_subcommand("dim", "dimension of the path algebra");
  graph_opt(adim);
  bind(adim, cmd_algebra_dim);
  auto* amul = alg->add_subcommand("mul", "product of two elements");
  graph_opt(amul);
  amul->add_option("x", o.x, "left factor")->required();
  amul->add_option("y", o.y, "right factor")->required();
  bind(amul, cmd_algebra_mul);
  auto* aunit = alg->add_subcommand("unit", "the unit element");
  graph_opt(aunit);
  bind(aunit, cmd_algebra_unit);
  auto* acomm = alg->add_subcommand("commutative", "whether the algebra is commutative");
  graph_opt(acomm);
  bind(acomm, cmd_algebra_commutative);
  auto* aidem = alg->add_subcommand("idempotent", "whether x^2 = x");
  graph_opt(aidem);
  aidem->add_option("x", o.x, "element")->required();
  bind(aidem, cmd_algebra_idempotent);
  auto* aenum = alg->add_subcommand("enum-dim", "graphs with a given algebra dimension");
  aenum->add_option("n,--n", o.n, "dimension")->required();
  aenum->add_flag("--connected", o.connected, "connected graphs only");
  aenum->add_option("--budget", o.budget, "search budget");
  bind(aenum, cmd_algebra_enum_dim);

  auto* lv = app.add_subcommand("leavitt", "Leavitt path algebra operations");
  lv->require_subcommand(1);
  auto* lred = lv->add_subcommand("reduce", "normal form of a word combination");
  graph_opt(lred);
  lred->add_option("x", o.x, "expression, e.g. \"e* e\"")->required();
  lred->add_option("--engine", o.engine, "product, rewrite or both")->capture_default_str();
  lred->add_option("--seed", o.seed, "rewrite order seed; 0 is leftmost-innermost")->capture_default_str();
  bind(lred, cmd_leavitt_reduce);
  auto* lmul = lv->add_subcommand("mul", "product of two elements");
  graph_opt(lmul);
  lmul->add_option("x", o.x, "left factor")->required();
  lmul->add_option("y", o.y, "right factor")->required();
  bind(lmul, cmd_leavitt_mul);
  auto* ldim = lv->add_subcommand("dim", "dimension when finite");
  graph_opt(ldim);
  bind(ldim, cmd_leavitt_dim);
  auto* lquo = lv->add_subcommand("quotient", "image of an element of L(F) in L(E) for an admissible E");
  graph_opt(lquo);
  lquo->add_option("sub,--sub", o.graph2, "admissible subgraph E")->required();
  lquo->add_option("x", o.x, "element of L(F)")->required();
  bind(lquo, cmd_leavitt_quotient);
  auto* lpb = lv->add_subcommand("pullback", "pullback check for F1, F2 inside F1 union F2");
  graph_opt(lpb);
  lpb->add_option("other,--other", o.graph2, "second graph")->required();
  lpb->add_option("--filtration", o.filtration, "degree bound for infinite algebras")->capture_default_str();
  bind(lpb, cmd_leavitt_pullback);

  auto* mx = app.add_subcommand("matrix", "adjacency matrix operations");
  mx->require_subcommand(1);
  auto* mpow = mx->add_subcommand("power", "A^k");
  graph_opt(mpow);
  k_opt(mpow);
  bind(mpow, cmd_matrix_power);
  auto* mnil = mx->add_subcommand("nilpotent", "nilpotency index");
  graph_opt(mnil);
  bind(mnil, cmd_matrix_nilpotent);

  auto* conj = app.add_subcommand("conjecture", "numerical experiments");
  conj->require_subcommand(1);
  auto* explore = conj->add_subcommand("explore", "ascent on the real relaxation");
  explore->add_option("n,--n", o.real_n, "total weight N")->required();
  k_opt(explore);
  explore->add_option("--seed", o.seed)->capture_default_str();
  explore->add_option("--restarts", o.restarts)->capture_default_str();
  explore->add_option("--iterations", o.iterations)->capture_default_str();
  explore->add_option("--max-dim", o.max_dim)->capture_default_str();
  bind(explore, cmd_conjecture);

  auto* conv = app.add_subcommand("convert", "graph or trace JSON to DOT or normalized JSON");
  graph_opt(conv);
  conv->add_option("--to", o.to, "dot or json")->capture_default_str();
  bind(conv, cmd_convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    status = action ? action() : 0;
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
