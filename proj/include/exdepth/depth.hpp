#pragma once

// Depth, complexity and singular variety of E/I_E(G).
//
// depth_exterior() tries, in order: the empty graph, peeling isolated
// vertices, splitting components, the generator's family tag, structural
// probes (path, cycle, universal vertex, forest, duplicate vertex) and
// finally the Hochster or rank-variety oracle. Each step appends to the
// report's method chain.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "exdepth/exterior.hpp"
#include "exdepth/families.hpp"
#include "exdepth/graph.hpp"
#include "exdepth/hochster.hpp"
#include "exdepth/invariants.hpp"
#include "exdepth/variety.hpp"

namespace exdepth {

enum class Method { Auto, Oracle, Rank, Formula };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Oracle: return "oracle";
    case Method::Rank: return "rank";
    case Method::Formula: return "formula";
  }
  return "auto";
}

inline Method parse_method(std::string_view s) {
  if (s == "auto") return Method::Auto;
  if (s == "oracle") return Method::Oracle;
  if (s == "rank") return Method::Rank;
  if (s == "formula") return Method::Formula;
  throw DomainError("unknown method '" + std::string(s) + "'");
}

struct DepthOptions {
  Method method = Method::Auto;
  int max_oracle_n = 16;
  int rank_cap = 14;
  int trials = 3;
  std::uint64_t seed = 0;
};

struct BoundsReport {
  /// n + 1 - 2 sqrt(n).
  double general = 0;
  std::optional<int> bipartite;
  bool attained_general = false;
  std::optional<bool> attained_bipartite;
  /// Bounds are stated for graphs without isolated vertices.
  bool applies = true;
  bool satisfied_general = true;
  std::optional<bool> satisfied_bipartite;
  /// For n = m^2 with the general bound attained: whether G has the shape
  /// W(K_m, m - 1).
  std::optional<bool> extremal_shape;
};

struct DepthReport {
  int n = 0;
  int depth_E = 0;
  int cx_E = 0;
  std::optional<int> depth_S;
  std::optional<int> pd_S;
  std::optional<int> reg;
  std::optional<CoordinateSubspaceUnion> variety;
  std::string variety_omitted;
  std::vector<std::string> method;
  BoundsReport bounds;
};

// ---------------------------------------------------------------------------
// Closed forms

/// V_E(P_n) on a path listed in order: ∪_{i ≡ 1 (3)} V(x_i) when n ≡ 1 (mod 3), else E_1.
inline CoordinateSubspaceUnion path_variety(int ambient, const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  if (n % 3 != 1) return CoordinateSubspaceUnion::whole(ambient);
  std::vector<VertexSet> zs;
  for (int i = 0; i < n; i += 3) zs.push_back(bits::bit(order[static_cast<std::size_t>(i)]));
  return CoordinateSubspaceUnion(ambient, zs);
}

inline int path_depth(int n) { return n % 3 == 1 ? 1 : 0; }

inline int cycle_depth_S(int n) { return n % 3 == 1 ? n / 3 : (n + 2) / 3; }

struct SpiderFormula {
  int p = 0;
  int q = 0;
  int depth = 0;
  CoordinateSubspaceUnion variety;
};

/// The leg-wise closed form for SP_{n_1..n_k} as generated (head 0, legs in order).
inline SpiderFormula spider_formula(const std::vector<int>& legs) {
  int n = 1;
  for (int l : legs) n += l;
  SpiderFormula f;
  if (n > kMaxMaskVertices) {
    for (int l : legs) {
      f.p += l % 3 == 1;
      f.q += l % 3 == 2;
    }
    f.depth = std::min(f.p, f.q);
    return f;
  }
  auto first = CoordinateSubspaceUnion::whole(n), second = CoordinateSubspaceUnion::whole(n);
  int start = 1;
  for (int l : legs) {
    int residue = l % 3;
    if (residue == 1 || residue == 2) {
      std::vector<VertexSet> zs;
      for (int i = residue; i <= l; i += 3) zs.push_back(bits::bit(start + i - 1));
      auto leg = CoordinateSubspaceUnion(n, zs);
      if (residue == 1) {
        ++f.p;
        first = intersect(first, leg);
      } else {
        ++f.q;
        second = intersect(second, leg);
      }
    }
    start += l;
  }
  f.depth = std::min(f.p, f.q);
  f.variety = unite(first, second);
  return f;
}

/// Strict Ferrers sequence: (depth_S, depth_E).
inline std::pair<int, int> ferrers_depth(const std::vector<int>& lambda) {
  if (lambda.empty()) throw DomainError("ferrers sequence must be nonempty");
  if (!FerrersSpec{lambda}.strict() || lambda.back() <= 0)
    throw DomainError("ferrers formula needs a strictly decreasing positive sequence");
  int m = static_cast<int>(lambda.size());
  int best = lambda[0] - lambda[0] - 1;
  for (int j = 1; j <= m; ++j) best = std::min(best, lambda[0] - lambda[static_cast<std::size_t>(j - 1)] - j);
  return {m + best + 1, m + best};
}

/// depth_E W(G, m_1, ..., m_k).
inline long whisker_depth(const Graph& base, const std::vector<int>& ms) {
  if (ms.empty()) throw DomainError("whiskering needs at least one multiplicity");
  for (int m : ms)
    if (m <= 0) throw DomainError("whisker multiplicities must be positive");
  long n = base.order();
  if (ms.size() == 1) return ms[0] * (n - independence_number(base));
  long d = n;
  for (std::size_t i = 0; i + 2 < ms.size(); ++i) d *= ms[i] + 1;
  return d * ms.back();
}

/// Bipartite graph with nested neighbourhoods on one side: its sequence
/// (largest part first), or nullopt.
inline std::optional<std::vector<int>> ferrers_sequence(const Graph& g) {
  if (g.order() == 0 || !g.has_masks() || !isolated_vertices(g).empty()) return std::nullopt;
  auto bp = bipartition(g);
  if (!bp || components(g).size() != 1) return std::nullopt;
  for (VertexSet side : {bp->left, bp->right}) {
    std::vector<VertexSet> nbhd;
    bits::for_each(side, [&](int v) { nbhd.push_back(g.neighbor_mask(v)); });
    std::sort(nbhd.begin(), nbhd.end(), [](VertexSet a, VertexSet b) { return bits::count(a) > bits::count(b); });
    bool chain = true;
    for (std::size_t i = 1; i < nbhd.size(); ++i) chain = chain && (nbhd[i] & ~nbhd[i - 1]) == 0;
    if (!chain) continue;
    std::vector<int> lambda;
    for (VertexSet s : nbhd) lambda.push_back(bits::count(s));
    return lambda;
  }
  return std::nullopt;
}

/// Whether the Ferrers closed form may be used: nested-neighbourhood
/// bipartite graph with a strictly decreasing sequence.
inline bool ferrers_formula_eligible(const Graph& g) {
  auto l = ferrers_sequence(g);
  return l.has_value() && FerrersSpec{*l}.strict();
}

// ---------------------------------------------------------------------------
// Bounds

/// Whether G is shaped like W(K_m, m - 1): m mutually adjacent core vertices,
/// each carrying exactly m - 1 leaves, and nothing else.
inline bool is_complete_whiskering_shape(const Graph& g, int m) {
  if (m < 2 || g.order() != m * m) return false;
  std::vector<int> core;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) continue;
    core.push_back(v);
  }
  if (m == 2) {
    // P_4: both degree-2 vertices are the core.
    if (core.size() != 2 || !g.adjacent(core[0], core[1])) return false;
  } else if (static_cast<int>(core.size()) != m) {
    return false;
  }
  for (int u : core) {
    int leaves = 0;
    for (int w : g.neighbors(u)) {
      if (g.degree(w) == 1)
        ++leaves;
      else if (std::find(core.begin(), core.end(), w) == core.end())
        return false;
    }
    if (leaves != m - 1 || g.degree(u) != 2 * (m - 1)) return false;
  }
  return g.edge_count() == static_cast<std::size_t>(m * (m - 1) / 2 + m * (m - 1));
}

inline BoundsReport bounds_report(const Graph& g, int depth) {
  BoundsReport b;
  const long n = g.order();
  b.general = static_cast<double>(n) + 1.0 - 2.0 * std::sqrt(static_cast<double>(n));
  b.applies = isolated_vertices(g).empty();
  // depth <= n + 1 - 2 sqrt(n)  <=>  n + 1 - depth >= 0 and (n + 1 - depth)^2 >= 4n.
  long slack = n + 1 - depth;
  b.satisfied_general = slack >= 0 && slack * slack >= 4 * n;
  b.attained_general = slack >= 0 && slack * slack == 4 * n;
  if (g.has_masks() && bipartition(g).has_value()) {
    b.bipartite = static_cast<int>(n / 2 - 1);
    b.attained_bipartite = depth == *b.bipartite;
    b.satisfied_bipartite = depth <= *b.bipartite;
  }
  long m = std::lround(std::sqrt(static_cast<double>(n)));
  if (b.applies && m * m == n && b.attained_general) b.extremal_shape = is_complete_whiskering_shape(g, static_cast<int>(m));
  return b;
}

// ---------------------------------------------------------------------------
// Forests

namespace detail {

inline std::vector<int> path_order(const Graph& g, VertexSet mask) {
  int start = -1;
  bits::for_each(mask, [&](int v) {
    if (start < 0 && bits::count(g.neighbor_mask(v) & mask) <= 1) start = v;
  });
  std::vector<int> order;
  int prev = -1, cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    int next = -1;
    bits::for_each(g.neighbor_mask(cur) & mask, [&](int w) {
      if (w != prev) next = w;
    });
    prev = cur;
    cur = next;
  }
  return order;
}

inline VertexSet component_of(const Graph& g, VertexSet mask, int v) {
  VertexSet seen = bits::bit(v), frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    bits::for_each(frontier, [&](int u) { next |= g.neighbor_mask(u) & mask; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

/// Leaf recursion on induced subforests. Varieties are expressed in the full
/// ambient space, with zero-sets inside the current vertex set.
class ForestSolver {
 public:
  explicit ForestSolver(const Graph& g) : g_(g), n_(g.order()) {}

  const CoordinateSubspaceUnion& solve(VertexSet mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    CoordinateSubspaceUnion v = compute(mask);
    return memo_.emplace(mask, std::move(v)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  CoordinateSubspaceUnion compute(VertexSet mask) {
    if (mask == 0) return CoordinateSubspaceUnion::whole(n_);
    VertexSet isolated = 0;
    bits::for_each(mask, [&](int v) {
      if ((g_.neighbor_mask(v) & mask) == 0) isolated |= bits::bit(v);
    });
    if (isolated != 0) {
      const auto& rest = solve(mask & ~isolated);
      std::vector<VertexSet> zs = rest.components();
      for (auto& z : zs) z |= isolated;
      return CoordinateSubspaceUnion(n_, zs);
    }
    VertexSet first = component_of(g_, mask, bits::lowest(mask));
    if (first != mask) {
      CoordinateSubspaceUnion acc = solve(first);
      VertexSet rest = mask & ~first;
      while (rest != 0) {
        VertexSet c = component_of(g_, rest, bits::lowest(rest));
        acc = intersect(acc, solve(c));
        rest &= ~c;
      }
      return acc;
    }
    int max_deg = 0;
    bits::for_each(mask, [&](int v) { max_deg = std::max(max_deg, bits::count(g_.neighbor_mask(v) & mask)); });
    if (max_deg <= 2) return path_variety(n_, path_order(g_, mask));
    // A leaf next to a vertex of maximum degree, if any; otherwise any leaf.
    int leaf = -1, parent = -1;
    auto pick = [&](bool near_hub) {
      bits::for_each(mask, [&](int w) {
        if (leaf >= 0) return;
        VertexSet nb = g_.neighbor_mask(w) & mask;
        if (bits::count(nb) != 1) return;
        int v = bits::lowest(nb);
        if (!near_hub || bits::count(g_.neighbor_mask(v) & mask) == max_deg) {
          leaf = w;
          parent = v;
        }
      });
    };
    pick(true);
    if (leaf < 0) pick(false);
    auto without_leaf = intersect(solve(mask & ~bits::bit(leaf)), CoordinateSubspaceUnion::single(n_, bits::bit(leaf)));
    return unite(without_leaf, solve(mask & ~(g_.neighbor_mask(parent) | bits::bit(parent))));
  }

  const Graph& g_;
  int n_;
  std::unordered_map<VertexSet, CoordinateSubspaceUnion> memo_;
};

}  // namespace detail

/// Depth and variety of a forest by leaf recursion.
inline DepthReport tree_depth_and_variety(const Graph& g) {
  if (!is_forest(g)) throw DomainError("tree recursion needs a forest");
  if (!g.has_masks()) throw CapExceeded("tree recursion supports at most 64 vertices");
  detail::ForestSolver solver(g);
  DepthReport r;
  r.n = g.order();
  r.variety = solver.solve(g.vertex_mask());
  r.depth_E = r.variety->codim().value_or(r.n);
  r.cx_E = r.n - r.depth_E;
  r.method = {"tree-recursion"};
  r.bounds = bounds_report(g, r.depth_E);
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace detail {

struct Partial {
  int depth = 0;
  std::optional<CoordinateSubspaceUnion> variety;
  std::string variety_omitted;
  std::optional<int> depth_S, pd_S, reg;
  std::vector<std::string> method;
};

inline constexpr const char* kTooLargeForVariety = "varieties are limited to 64 coordinates";

inline Partial zero_depth(int n, std::string step) {
  Partial p;
  p.depth = 0;
  if (n <= kMaxMaskVertices)
    p.variety = CoordinateSubspaceUnion::whole(n);
  else
    p.variety_omitted = kTooLargeForVariety;
  p.method = {std::move(step)};
  return p;
}

inline Partial hochster_partial(const Graph& g, const DepthOptions& opt) {
  HochsterOptions ho;
  ho.cap = opt.max_oracle_n;
  auto b = multigraded_betti(g, ho);
  Partial p;
  auto dv = depth_and_variety(b);
  p.depth = dv.depth_E;
  p.variety = dv.variety;
  p.depth_S = b.depth_S;
  p.pd_S = b.pd_S;
  p.reg = b.reg;
  p.method = {"hochster-oracle"};
  return p;
}

inline Partial rank_partial(const Graph& g, const DepthOptions& opt) {
  RankVarietyOptions ro;
  ro.trials = opt.trials;
  ro.seed = opt.seed;
  ro.cap = opt.rank_cap;
  auto r = depth_via_rank_variety(g, ro);
  Partial p;
  p.depth = r.depth;
  p.variety = r.variety;
  p.method = {"rank-variety"};
  return p;
}

std::optional<Partial> dispatch(const Graph& g, const DepthOptions& opt, bool allow_oracle);

inline std::optional<Partial> family_partial(const Graph& g) {
  const FamilySpec* f = g.family();
  if (f == nullptr) return std::nullopt;
  const int n = g.order();
  if (const auto* p = std::get_if<PathSpec>(&f->variant)) {
    std::vector<int> order(static_cast<std::size_t>(p->n));
    std::iota(order.begin(), order.end(), 0);
    Partial out;
    out.depth = path_depth(p->n);
    if (n <= kMaxMaskVertices)
      out.variety = path_variety(n, order);
    else
      out.variety_omitted = kTooLargeForVariety;
    out.method = {"path-formula"};
    return out;
  }
  if (const auto* c = std::get_if<CycleSpec>(&f->variant)) {
    Partial out = zero_depth(n, "cycle-formula");
    out.depth_S = cycle_depth_S(c->n);
    out.pd_S = n - *out.depth_S;
    return out;
  }
  if (const auto* c = std::get_if<CompleteMultipartiteSpec>(&f->variant)) {
    if (c->parts.size() >= 2) return zero_depth(n, "complete-multipartite-formula");
    return std::nullopt;
  }
  if (const auto* s = std::get_if<SpiderSpec>(&f->variant)) {
    auto sf = spider_formula(s->legs);
    if (sf.p == 0 && sf.q == 0) return std::nullopt;
    Partial out;
    out.depth = sf.depth;
    if (n <= kMaxMaskVertices)
      out.variety = sf.variety;
    else
      out.variety_omitted = kTooLargeForVariety;
    out.method = {"spider-formula"};
    return out;
  }
  if (const auto* fe = std::get_if<FerrersSpec>(&f->variant)) {
    if (!fe->strict()) return std::nullopt;
    auto [ds, de] = ferrers_depth(fe->lambda);
    Partial out;
    out.depth = de;
    out.depth_S = ds;
    out.pd_S = n - ds;
    out.reg = 1;
    out.variety_omitted = "ferrers formula gives depth only";
    out.method = {"ferrers-formula"};
    if (de == 0 && n <= kMaxMaskVertices) out.variety = CoordinateSubspaceUnion::whole(n);
    return out;
  }
  if (const auto* w = std::get_if<WhiskerSpec>(&f->variant)) {
    if (w->multiplicities.size() == 1 && !w->base->has_masks()) return std::nullopt;
    Partial out;
    out.depth = static_cast<int>(whisker_depth(*w->base, w->multiplicities));
    out.variety_omitted = "whiskering formula gives depth only";
    out.method = {"whisker-formula"};
    if (out.depth == 0 && n <= kMaxMaskVertices) out.variety = CoordinateSubspaceUnion::whole(n);
    return out;
  }
  return std::nullopt;
}

/// Connected, isolated-free, untagged graphs.
inline std::optional<Partial> probe_partial(const Graph& g, const DepthOptions& opt) {
  const int n = g.order();
  int max_deg = 0, min_deg = n;
  for (int v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  bool tree = g.edge_count() + 1 == static_cast<std::size_t>(n);
  if (tree && max_deg <= 2) {
    Partial out;
    out.depth = path_depth(n);
    out.variety = path_variety(n, path_order(g, g.vertex_mask()));
    out.method = {"path-probe"};
    return out;
  }
  if (min_deg == 2 && max_deg == 2) {
    Partial out = zero_depth(n, "cycle-probe");
    out.depth_S = cycle_depth_S(n);
    out.pd_S = n - *out.depth_S;
    return out;
  }
  if (universal_vertex(g)) return zero_depth(n, "universal-vertex");
  if (tree) {
    ForestSolver solver(g);
    Partial out;
    out.variety = solver.solve(g.vertex_mask());
    out.depth = out.variety->codim().value_or(n);
    out.method = {"tree-recursion"};
    return out;
  }
  auto dups = duplicate_pairs(g);
  if (!dups.empty()) {
    auto h = delete_vertex(g, dups.front().second).graph;
    DepthOptions formula_only = opt;
    formula_only.method = Method::Formula;
    if (auto sub = dispatch(h, formula_only, false); sub && sub->depth == 0) {
      Partial out = zero_depth(n, "duplicate-vertex");
      for (auto& s : sub->method) out.method.push_back("  " + s);
      return out;
    }
  }
  return std::nullopt;
}

inline std::optional<Partial> dispatch(const Graph& g, const DepthOptions& opt, bool allow_oracle) {
  const int n = g.order();
  if (n == 0) {
    Partial p = zero_depth(0, "empty");
    p.depth_S = 0;
    p.pd_S = 0;
    p.reg = 0;
    return p;
  }
  if (!g.has_masks()) {
    if (auto fp = family_partial(g)) return fp;
    return std::nullopt;
  }
  auto iso = isolated_vertices(g);
  if (!iso.empty()) {
    Partial p;
    if (static_cast<int>(iso.size()) == n) {
      p.depth = n;
      p.variety = CoordinateSubspaceUnion::single(n, bits::full(n));
      p.depth_S = n;
      p.pd_S = 0;
      p.reg = 0;
      p.method = {"isolated-vertices(" + std::to_string(n) + ")"};
      return p;
    }
    auto sub = induced_subgraph(g, all_vertices_except(g, iso));
    auto rest = dispatch(sub.graph, opt, allow_oracle);
    if (!rest) return std::nullopt;
    int k = static_cast<int>(iso.size());
    p.depth = rest->depth + k;
    VertexSet extra = bits::from_range(iso);
    if (rest->variety) p.variety = rest->variety->lift(n, sub.new_to_old, extra);
    p.variety_omitted = rest->variety_omitted;
    if (rest->depth_S) p.depth_S = *rest->depth_S + k;
    p.pd_S = rest->pd_S;
    p.reg = rest->reg;
    p.method = {"isolated-vertices(" + std::to_string(k) + ")"};
    p.method.insert(p.method.end(), rest->method.begin(), rest->method.end());
    return p;
  }
  auto comps = components(g);
  if (comps.size() > 1) {
    Partial p;
    p.variety = CoordinateSubspaceUnion::whole(n);
    p.depth_S = 0;
    p.pd_S = 0;
    p.reg = 0;
    p.method = {"disjoint-union(" + std::to_string(comps.size()) + ")"};
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto sub = induced_subgraph(g, comps[c]);
      auto part = dispatch(sub.graph, opt, allow_oracle);
      if (!part) return std::nullopt;
      p.depth += part->depth;
      if (p.variety && part->variety)
        p.variety = intersect(*p.variety, part->variety->lift(n, sub.new_to_old));
      else {
        p.variety.reset();
        if (p.variety_omitted.empty()) p.variety_omitted = part->variety_omitted;
      }
      auto add = [](std::optional<int>& acc, const std::optional<int>& x) {
        if (acc && x)
          *acc += *x;
        else
          acc.reset();
      };
      add(p.depth_S, part->depth_S);
      add(p.pd_S, part->pd_S);
      add(p.reg, part->reg);
      for (auto& s : part->method) p.method.push_back("  [" + std::to_string(c + 1) + "] " + s);
    }
    if (!p.variety && p.depth == 0) p.variety = CoordinateSubspaceUnion::whole(n);
    return p;
  }
  if (auto fp = family_partial(g)) return fp;
  if (auto pp = probe_partial(g, opt)) return pp;
  if (!allow_oracle) return std::nullopt;
  if (n <= opt.max_oracle_n) return hochster_partial(g, opt);
  if (n <= opt.rank_cap) return rank_partial(g, opt);
  return std::nullopt;
}

inline DepthReport finish(const Graph& g, Partial p) {
  DepthReport r;
  r.n = g.order();
  r.depth_E = p.depth;
  r.cx_E = r.n - r.depth_E;
  r.depth_S = p.depth_S;
  r.pd_S = p.pd_S;
  r.reg = p.reg;
  r.variety = std::move(p.variety);
  if (!r.variety) r.variety_omitted = p.variety_omitted.empty() ? "not computed" : p.variety_omitted;
  r.method = std::move(p.method);
  r.bounds = bounds_report(g, r.depth_E);
  return r;
}

inline std::string refusal_message(const Graph& g, const DepthOptions& opt) {
  return "no formula applies to this " + std::to_string(g.order()) +
         "-vertex graph and it exceeds the oracle caps (hochster-oracle: n <= " + std::to_string(opt.max_oracle_n) +
         ", rank-variety: n <= " + std::to_string(opt.rank_cap) + ", bitmask engines: n <= 64)";
}

}  // namespace detail

inline DepthReport depth_exterior(const Graph& g, const DepthOptions& opt = {}) {
  switch (opt.method) {
    case Method::Oracle:
      if (g.order() > opt.max_oracle_n)
        throw CapExceeded("Hochster oracle cap is " + std::to_string(opt.max_oracle_n) + " vertices; graph has " +
                          std::to_string(g.order()));
      return detail::finish(g, detail::hochster_partial(g, opt));
    case Method::Rank:
      return detail::finish(g, detail::rank_partial(g, opt));
    case Method::Formula:
    case Method::Auto: {
      auto p = detail::dispatch(g, opt, opt.method == Method::Auto);
      if (!p) throw CapExceeded(detail::refusal_message(g, opt));
      return detail::finish(g, std::move(*p));
    }
  }
  throw DomainError("unknown method");
}

}  // namespace exdepth
