#pragma once

// Multigraded Betti numbers of S/I_S(G) from the independence complexes of
// induced subgraphs:
//
//   beta_{i,sigma} = dim H~_{|sigma|-i-1}(Ind(G[sigma]); Q).
//
// The non-vanishing multidegrees give depth_E and the singular variety.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "exdepth/graph.hpp"
#include "exdepth/linalg.hpp"
#include "exdepth/variety.hpp"

namespace exdepth {

/// Faces stored explicitly, grouped by dimension: faces[d + 1] holds the
/// d-dimensional faces in lexicographic order, so faces[0] = {∅}.
struct SimplicialComplex {
  VertexSet vertices = 0;
  std::vector<std::vector<VertexSet>> faces;

  int dim() const { return static_cast<int>(faces.size()) - 2; }
  std::size_t face_count() const {
    std::size_t c = 0;
    for (const auto& f : faces) c += f.size();
    return c;
  }
  /// Facets (faces contained in no larger face), in graded order.
  std::vector<VertexSet> facets() const {
    std::vector<VertexSet> out;
    for (std::size_t d = faces.size(); d-- > 0;)
      for (VertexSet f : faces[d])
        if (std::none_of(out.begin(), out.end(), [&](VertexSet g) { return (f & ~g) == 0; })) out.push_back(f);
    std::sort(out.begin(), out.end(), bits::graded_less);
    return out;
  }
};

struct HochsterOptions {
  int cap = 16;
  /// Skip sigma whose induced subgraph has an isolated vertex (a cone point
  /// of the complex, hence acyclic). Turning it off is for cross-checking.
  bool skip_cone_points = true;
  std::size_t face_limit = std::size_t{1} << 20;
};

/// Ind(G[within]).
inline SimplicialComplex independence_complex(const Graph& g, VertexSet within,
                                              std::size_t face_limit = std::size_t{1} << 20) {
  SimplicialComplex c;
  c.vertices = within;
  c.faces.push_back({0});
  std::size_t total = 1;
  for (std::size_t d = 0; !c.faces[d].empty(); ++d) {
    std::vector<VertexSet> next;
    for (VertexSet f : c.faces[d]) {
      int start = f == 0 ? 0 : 64 - std::countl_zero(f);
      VertexSet ext = within & ~bits::full(start);
      bits::for_each(f, [&](int v) { ext &= ~g.neighbor_mask(v); });
      bits::for_each(ext, [&](int v) { next.push_back(f | bits::bit(v)); });
    }
    total += next.size();
    if (total > face_limit)
      throw CapExceeded("independence complex exceeds " + std::to_string(face_limit) + " faces");
    std::sort(next.begin(), next.end(), bits::lex_less);
    c.faces.push_back(std::move(next));
  }
  c.faces.pop_back();
  return c;
}

inline SimplicialComplex independence_complex(const Graph& g, const HochsterOptions& opt = {}) {
  if (g.order() > opt.cap)
    throw CapExceeded("Hochster oracle cap is " + std::to_string(opt.cap) + " vertices; graph has " +
                      std::to_string(g.order()));
  return independence_complex(g, g.vertex_mask(), opt.face_limit);
}

/// dim H~_d(Δ; Q) for d = -1..dim Δ, stored at index d + 1.
inline std::vector<long> reduced_homology(const SimplicialComplex& c) {
  const std::size_t levels = c.faces.size();
  // rank[d + 1] = rank of ∂_d : C_d -> C_{d-1}; ∂_{-1} = 0.
  std::vector<long> rank(levels + 1, 0);
  std::unordered_map<VertexSet, std::uint32_t> pos;
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& lower = c.faces[k - 1];
    const auto& upper = c.faces[k];
    pos.clear();
    for (std::size_t r = 0; r < lower.size(); ++r) pos.emplace(lower[r], static_cast<std::uint32_t>(r));
    linalg::IntMatrix m(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
      int sign = 1;
      bits::for_each(upper[col], [&](int v) {
        m.push(pos.at(upper[col] & ~bits::bit(v)), col, sign);
        sign = -sign;
      });
      auto& column = m.columns[col];
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    rank[k] = static_cast<long>(linalg::exact_rank(m));
  }
  std::vector<long> out(levels);
  for (std::size_t k = 0; k < levels; ++k)
    out[k] = static_cast<long>(c.faces[k].size()) - rank[k] - rank[k + 1];
  return out;
}

/// dim H~_d for d = 0..dim Δ.
inline std::vector<long> reduced_homology_dims(const SimplicialComplex& c) {
  auto all = reduced_homology(c);
  return std::vector<long>(all.begin() + 1, all.end());
}

struct BettiEntry {
  int i = 0;
  VertexSet sigma = 0;
  long value = 0;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiData {
  int n = 0;
  /// Nonzero beta_{i,sigma}, ordered by i then graded sigma.
  std::vector<BettiEntry> entries;
  /// Non-vanishing multidegrees in graded order.
  std::vector<VertexSet> sigma;
  int pd_S = 0;
  int depth_S = 0;
  int reg = 0;
  int max_shift = 0;

  long fine(int i, VertexSet s) const {
    for (const auto& e : entries)
      if (e.i == i && e.sigma == s) return e.value;
    return 0;
  }
  /// beta_{i,j} = sum over |sigma| = j.
  long coarse(int i, int j) const {
    long t = 0;
    for (const auto& e : entries)
      if (e.i == i && bits::count(e.sigma) == j) t += e.value;
    return t;
  }
  long total(int i) const {
    long t = 0;
    for (const auto& e : entries)
      if (e.i == i) t += e.value;
    return t;
  }
};

namespace detail {

inline bool has_isolated_vertex(const Graph& g, VertexSet s) {
  bool iso = false;
  bits::for_each(s, [&](int v) { iso = iso || (g.neighbor_mask(v) & s) == 0; });
  return iso;
}

inline void check_cap(const Graph& g, const HochsterOptions& opt) {
  if (g.order() > opt.cap)
    throw CapExceeded("Hochster oracle cap is " + std::to_string(opt.cap) + " vertices; graph has " +
                      std::to_string(g.order()));
}

/// Appends the nonzero beta_{i,sigma} for one sigma.
inline void betti_at(const Graph& g, VertexSet s, const HochsterOptions& opt, std::vector<BettiEntry>& out) {
  if (s != 0 && opt.skip_cone_points && has_isolated_vertex(g, s)) return;
  auto h = reduced_homology(independence_complex(g, s, opt.face_limit));
  int size = bits::count(s);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0) continue;
    int d = static_cast<int>(k) - 1;
    out.push_back({size - d - 1, s, h[k]});
  }
}

}  // namespace detail

inline BettiData multigraded_betti(const Graph& g, const HochsterOptions& opt = {}) {
  detail::check_cap(g, opt);
  const int n = g.order();
  BettiData b;
  b.n = n;
  for (int k = 0; k <= n; ++k)
    bits::for_each_subset_of_size(bits::full(n), k, [&](VertexSet s) { detail::betti_at(g, s, opt, b.entries); });
  std::stable_sort(b.entries.begin(), b.entries.end(), [](const BettiEntry& x, const BettiEntry& y) {
    if (x.i != y.i) return x.i < y.i;
    return bits::graded_less(x.sigma, y.sigma);
  });
  for (const auto& e : b.entries) {
    b.sigma.push_back(e.sigma);
    b.pd_S = std::max(b.pd_S, e.i);
    b.reg = std::max(b.reg, bits::count(e.sigma) - e.i);
    b.max_shift = std::max(b.max_shift, bits::count(e.sigma));
  }
  std::sort(b.sigma.begin(), b.sigma.end(), bits::graded_less);
  b.sigma.erase(std::unique(b.sigma.begin(), b.sigma.end()), b.sigma.end());
  b.depth_S = n - b.pd_S;
  return b;
}

struct DepthVarietyResult {
  int depth_E = 0;
  CoordinateSubspaceUnion variety;
};

inline DepthVarietyResult depth_and_variety(const BettiData& b) {
  return {b.n - b.max_shift, CoordinateSubspaceUnion::from_sigma(b.n, b.sigma)};
}

inline DepthVarietyResult depth_and_variety(const Graph& g, const HochsterOptions& opt = {}) {
  return depth_and_variety(multigraded_betti(g, opt));
}

/// depth_E alone: scans sigma from the largest size down and stops at the
/// first size carrying a nonzero Betti number.
inline int hochster_depth_only(const Graph& g, const HochsterOptions& opt = {}) {
  detail::check_cap(g, opt);
  const int n = g.order();
  std::vector<BettiEntry> scratch;
  for (int k = n; k >= 1; --k) {
    bool hit = false;
    bits::for_each_subset_of_size(bits::full(n), k, [&](VertexSet s) {
      detail::betti_at(g, s, opt, scratch);
      hit = !scratch.empty();
      return !hit;
    });
    if (hit) return n - k;
  }
  return n;
}

/// Betti table with rows j - i, columns i, '-' for zero.
inline std::string render_betti_table(const BettiData& b) {
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(b.reg + 1),
                                      std::vector<long>(static_cast<std::size_t>(b.pd_S + 1), 0));
  for (const auto& e : b.entries)
    rows[static_cast<std::size_t>(bits::count(e.sigma) - e.i)][static_cast<std::size_t>(e.i)] += e.value;
  std::size_t width = 1;
  for (const auto& r : rows)
    for (long v : r) width = std::max(width, std::to_string(v).size());
  std::size_t label = std::to_string(b.reg).size() + 1;
  std::ostringstream os;
  os << std::string(label, ' ');
  for (int i = 0; i <= b.pd_S; ++i) os << ' ' << std::setw(static_cast<int>(width)) << i;
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << std::setw(static_cast<int>(label)) << (std::to_string(r) + ":");
    for (long v : rows[r]) os << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string("-") : std::to_string(v));
    os << '\n';
  }
  return os.str();
}

}  // namespace exdepth
