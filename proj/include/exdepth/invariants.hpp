#pragma once

// Small-graph combinatorial invariants: independence number, induced
// matching number, largest minimal vertex cover, bipartition, components.
// All searches are exact and bitmask based (n <= 64).

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "exdepth/graph.hpp"

namespace exdepth {

struct Bipartition {
  VertexSet left = 0;
  VertexSet right = 0;
};

struct InvariantsReport {
  int alpha = 0;
  int cover = 0;
  int im = 0;
  int tau_max = 0;
  std::optional<Bipartition> bipartition;
  std::vector<std::vector<int>> components;
  bool is_tree = false;
  bool has_universal_vertex = false;
  std::vector<Edge> duplicate_pairs;
  std::vector<int> leaves;
};

namespace detail {

inline int alpha_search(const Graph& g, VertexSet avail, int current, int best) {
  if (avail == 0) return std::max(best, current);
  if (current + bits::count(avail) <= best) return best;
  // Vertices of degree <= 1 inside `avail` are always safe to take.
  int pick = -1, pick_deg = -1;
  VertexSet rest = avail;
  while (rest != 0) {
    int v = bits::lowest(rest);
    rest &= rest - 1;
    int d = bits::count(g.neighbor_mask(v) & avail);
    if (d <= 1) return alpha_search(g, avail & ~g.closed_neighbor_mask(v), current + 1, best);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  best = alpha_search(g, avail & ~g.closed_neighbor_mask(pick), current + 1, best);
  return alpha_search(g, avail & ~bits::bit(pick), current, best);
}

inline int induced_matching_search(const Graph& g, VertexSet avail) {
  while (avail != 0) {
    int u = bits::lowest(avail);
    if ((g.neighbor_mask(u) & avail) != 0) break;
    avail &= avail - 1;
  }
  if (avail == 0) return 0;
  int u = bits::lowest(avail);
  int best = induced_matching_search(g, avail & ~bits::bit(u));
  bits::for_each(g.neighbor_mask(u) & avail, [&](int v) {
    VertexSet blocked = g.closed_neighbor_mask(u) | g.closed_neighbor_mask(v);
    best = std::max(best, 1 + induced_matching_search(g, avail & ~blocked));
  });
  return best;
}

template <class F>
void bron_kerbosch_independent(const Graph& g, VertexSet r, VertexSet p, VertexSet x, F& emit) {
  if (p == 0 && x == 0) {
    emit(r);
    return;
  }
  // Pivot: the vertex of p|x whose non-neighbourhood covers most of p.
  int pivot = -1, best = -1;
  bits::for_each(p | x, [&](int u) {
    int c = bits::count(p & ~g.closed_neighbor_mask(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet candidates = p & g.closed_neighbor_mask(pivot);
  bits::for_each(candidates, [&](int v) {
    VertexSet keep = ~g.closed_neighbor_mask(v);
    bron_kerbosch_independent(g, r | bits::bit(v), p & keep, x & keep, emit);
    p &= ~bits::bit(v);
    x |= bits::bit(v);
  });
}

}  // namespace detail

/// α(G[within]).
inline int independence_number(const Graph& g, VertexSet within) { return detail::alpha_search(g, within, 0, 0); }
inline int independence_number(const Graph& g) { return independence_number(g, g.vertex_mask()); }

/// All maximal independent sets of G[within] (maximal cliques of the complement).
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  auto emit = [&](VertexSet s) { out.push_back(s); };
  detail::bron_kerbosch_independent(g, 0, within, 0, emit);
  std::sort(out.begin(), out.end(), bits::graded_less);
  return out;
}
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return maximal_independent_sets(g, g.vertex_mask());
}

inline int induced_matching_number(const Graph& g) { return detail::induced_matching_search(g, g.vertex_mask()); }

/// τ_max(G) = n - (smallest maximal independent set).
inline int max_minimal_vertex_cover(const Graph& g) {
  int smallest = g.order();
  for (VertexSet s : maximal_independent_sets(g)) smallest = std::min(smallest, bits::count(s));
  return g.order() - smallest;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  bool ok = true;
  bits::for_each(s, [&](int v) { ok = ok && (g.neighbor_mask(v) & s) == 0; });
  return ok;
}

inline bool is_vertex_cover(const Graph& g, VertexSet c) {
  for (auto [u, v] : g.edges())
    if (!bits::contains(c, u) && !bits::contains(c, v)) return false;
  return true;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_forest(const Graph& g) {
  return g.edge_count() + components(g).size() == static_cast<std::size_t>(g.order());
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && components(g).size() == 1; }

inline std::vector<int> isolated_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

/// Some vertex adjacent to all others, if any (requires n >= 2).
inline std::optional<int> universal_vertex(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return v;
  return std::nullopt;
}

/// Pairs u < v with N(u) = N(v).
inline std::vector<Edge> duplicate_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
  return out;
}

inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  Bipartition out;
  for (int s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) (colour[static_cast<std::size_t>(v)] == 0 ? out.left : out.right) |= bits::bit(v);
  return out;
}

inline InvariantsReport invariants(const Graph& g) {
  if (!g.has_masks()) throw CapExceeded("invariants are computed for graphs with at most 64 vertices");
  InvariantsReport r;
  r.alpha = independence_number(g);
  r.cover = g.order() - r.alpha;
  r.im = induced_matching_number(g);
  r.tau_max = max_minimal_vertex_cover(g);
  r.bipartition = bipartition(g);
  r.components = components(g);
  r.is_tree = is_tree(g);
  r.has_universal_vertex = universal_vertex(g).has_value();
  r.duplicate_pairs = duplicate_pairs(g);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) r.leaves.push_back(v);
  return r;
}

}  // namespace exdepth
