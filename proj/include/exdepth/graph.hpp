#pragma once

// Finite simple graphs on vertices 0..n-1.
//
// Vertices are 0-based everywhere in the C++ API. The edge-list text format,
// variety rendering and JSON output are 1-based.

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace exdepth {

/// Bitmask over at most 64 vertices. Most exact engines work on these.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxMaskVertices = 64;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an engine refuses an input that exceeds one of its caps.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace bits {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet full(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

template <class F>
void for_each(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for_each(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_range(std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

/// Lexicographic comparison of the sorted element lists of two sets.
inline bool lex_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Size first, then lexicographic.
inline bool graded_less(VertexSet a, VertexSet b) {
  if (count(a) != count(b)) return count(a) < count(b);
  return lex_less(a, b);
}

/// Calls f on every k-subset of `ground`, in lexicographic order.
template <class F>
void for_each_subset_of_size(VertexSet ground, int k, F&& f) {
  std::vector<int> elems = to_vector(ground);
  int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(elems[static_cast<std::size_t>(i)]);
    if constexpr (std::is_same_v<decltype(f(s)), bool>) {
      if (!f(s)) return;
    } else {
      f(s);
    }
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace bits

struct FamilySpec;

/// Vertex-labelled finite simple graph. Immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::span<const Edge> edges = {}, std::vector<std::string> labels = {})
      : n_(n), adj_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 0) throw DomainError("negative vertex count");
    if (!labels_.empty() && labels_.size() != adj_.size())
      throw DomainError("label count does not match vertex count");
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw DomainError("loop at vertex " + std::to_string(u + 1));
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edge_count_ += nb.size();
    }
    edge_count_ /= 2;
    if (!labels_.empty()) {
      auto sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("vertex labels must be pairwise distinct");
    }
    if (n_ <= kMaxMaskVertices) {
      masks_.assign(adj_.size(), 0);
      for (std::size_t v = 0; v < adj_.size(); ++v)
        for (int w : adj_[v]) masks_[v] |= bits::bit(w);
    }
  }

  Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {})
      : Graph(n, std::span<const Edge>(edges), std::move(labels)) {}

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// True when the bitmask accessors are available (n <= 64).
  bool has_masks() const noexcept { return n_ <= kMaxMaskVertices; }
  VertexSet neighbor_mask(int v) const {
    require_masks();
    check_vertex(v);
    return masks_[static_cast<std::size_t>(v)];
  }
  VertexSet closed_neighbor_mask(int v) const { return neighbor_mask(v) | bits::bit(v); }
  VertexSet vertex_mask() const {
    require_masks();
    return bits::full(n_);
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its 1-based index when unlabelled.
  std::string label(int v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v + 1) : labels_[static_cast<std::size_t>(v)];
  }

  /// Family tag attached by the generators; null for parsed or derived graphs.
  const FamilySpec* family() const noexcept { return family_.get(); }
  std::shared_ptr<const FamilySpec> family_ptr() const noexcept { return family_; }
  Graph with_family(std::shared_ptr<const FamilySpec> spec) const {
    Graph g = *this;
    g.family_ = std::move(spec);
    return g;
  }
  Graph without_family() const { return with_family(nullptr); }

  /// Structural equality including labels; family tags are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v + 1) + " does not exist");
  }
  void require_masks() const {
    if (!has_masks())
      throw CapExceeded("graph has " + std::to_string(n_) + " vertices; bitmask engines support at most 64");
  }

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> masks_;
  std::vector<std::string> labels_;
  std::shared_ptr<const FamilySpec> family_;
};

// ---------------------------------------------------------------------------
// Surgery

/// Result of a vertex-removing operation. Surviving vertices keep their
/// relative order; removed vertices map to -1.
struct Subgraph {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

/// Induced subgraph on `keep` (any order; result is sorted by old index).
inline Subgraph induced_subgraph(const Graph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Subgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order()) throw DomainError("vertex out of range");
    out.old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int u : keep)
    for (int v : g.neighbors(u)) {
      int nv = out.old_to_new[static_cast<std::size_t>(v)];
      int nu = out.old_to_new[static_cast<std::size_t>(u)];
      if (nv >= 0 && nu < nv) edges.emplace_back(nu, nv);
    }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int u : keep) labels.push_back(g.labels()[static_cast<std::size_t>(u)]);
  out.graph = Graph(static_cast<int>(keep.size()), edges, std::move(labels));
  out.new_to_old = std::move(keep);
  return out;
}

inline Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (g.order() < 64 && (keep >> g.order()) != 0) throw DomainError("vertex out of range");
  return induced_subgraph(g, bits::to_vector(keep));
}

inline std::vector<int> all_vertices_except(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (int v : removed) drop[static_cast<std::size_t>(v)] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  return keep;
}

inline Subgraph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v + 1) + " does not exist");
  return induced_subgraph(g, all_vertices_except(g, {v}));
}

/// G \ N[v].
inline Subgraph delete_closed_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v + 1) + " does not exist");
  std::vector<int> removed = g.neighbors(v);
  removed.push_back(v);
  return induced_subgraph(g, all_vertices_except(g, removed));
}

/// G \ uv: same vertex set, one edge fewer.
inline Subgraph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw DomainError("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " does not exist");
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  Subgraph out;
  out.graph = Graph(g.order(), edges, g.labels());
  out.old_to_new.resize(static_cast<std::size_t>(g.order()));
  std::iota(out.old_to_new.begin(), out.old_to_new.end(), 0);
  out.new_to_old = out.old_to_new;
  return out;
}

/// G/(u ~ v) for non-adjacent u != v. The merged vertex takes u's place and
/// label; v is removed.
inline Subgraph identify_vertices(const Graph& g, int u, int v) {
  if (u == v) throw DomainError("cannot identify a vertex with itself");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw DomainError("vertex out of range");
  if (g.adjacent(u, v)) throw DomainError("identifying adjacent vertices would create a loop");
  Subgraph out;
  std::vector<int> keep = all_vertices_except(g, {v});
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) out.old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  out.old_to_new[static_cast<std::size_t>(v)] = out.old_to_new[static_cast<std::size_t>(u)];
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    int x = out.old_to_new[static_cast<std::size_t>(a)], y = out.old_to_new[static_cast<std::size_t>(b)];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int w : keep) labels.push_back(g.labels()[static_cast<std::size_t>(w)]);
  out.graph = Graph(static_cast<int>(keep.size()), edges, std::move(labels));
  out.new_to_old = std::move(keep);
  return out;
}

/// G ⊔ H with H's vertices shifted after G's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + g.order(), b + g.order());
  std::vector<std::string> labels;
  if (g.has_labels() && h.has_labels()) {
    labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  }
  return Graph(g.order() + h.order(), edges, std::move(labels));
}

inline Graph add_isolated_vertex(const Graph& g) {
  return Graph(g.order() + 1, g.edges());
}

// ---------------------------------------------------------------------------
// Edge-list text format

/// Parses "n" followed by "u v" lines (1-based). '#' starts a comment.
inline Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  int n = -1;
  int line_no = 0;
  std::size_t pos = 0;
  auto parse_int = [](std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 0) throw ParseError(line_no, "malformed vertex count");
      continue;
    }
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw ParseError(line_no, "malformed line");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "endpoint out of range");
    if (u == v) throw ParseError(line_no, "loop");
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Graph(n, edges);
}

/// Deterministic edge-list rendering, edges sorted lexicographically.
inline std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace exdepth
