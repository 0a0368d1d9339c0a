#pragma once

// Graph families with closed-form depth results, and their generators.
//
// Generated graphs carry their FamilySpec as a tag so the depth engine can
// dispatch on it without structure recognition.

#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exdepth/graph.hpp"

namespace exdepth {

struct PathSpec {
  int n = 1;
};
struct CycleSpec {
  int n = 3;
};
struct CompleteMultipartiteSpec {
  std::vector<int> parts;
};
/// Spider with legs n_1 <= ... <= n_k; head is vertex 0.
struct SpiderSpec {
  std::vector<int> legs;
};
/// Ferrers graph of a decreasing sequence. Vertices v_1..v_m come first,
/// then w_1..w_{lambda_1}.
struct FerrersSpec {
  std::vector<int> lambda;
  bool strict() const {
    for (std::size_t i = 1; i < lambda.size(); ++i)
      if (lambda[i] >= lambda[i - 1]) return false;
    return true;
  }
};
/// W(base, m_1, ..., m_k), always stored flattened: `base` is never itself a
/// whiskering produced by generate().
struct WhiskerSpec {
  std::shared_ptr<const Graph> base;
  std::vector<int> multiplicities;
};
/// Edgeless graph on n vertices (n = 0 is the empty graph).
struct EmptySpec {
  int n = 0;
};

struct FamilySpec {
  std::variant<PathSpec, CycleSpec, CompleteMultipartiteSpec, SpiderSpec, FerrersSpec, WhiskerSpec, EmptySpec> variant;
};

inline FamilySpec path(int n) { return {PathSpec{n}}; }
inline FamilySpec cycle(int n) { return {CycleSpec{n}}; }
inline FamilySpec complete_multipartite(std::vector<int> parts) { return {CompleteMultipartiteSpec{std::move(parts)}}; }
inline FamilySpec complete(int n) { return complete_multipartite(std::vector<int>(static_cast<std::size_t>(n), 1)); }
inline FamilySpec spider(std::vector<int> legs) { return {SpiderSpec{std::move(legs)}}; }
inline FamilySpec ferrers(std::vector<int> lambda) { return {FerrersSpec{std::move(lambda)}}; }
inline FamilySpec empty_family(int n = 0) { return {EmptySpec{n}}; }

Graph generate(const FamilySpec& spec);

/// W(base, ms...). A base that is already a tagged whiskering is flattened.
inline FamilySpec whisker(const Graph& base, std::vector<int> ms) {
  if (const FamilySpec* f = base.family()) {
    if (const auto* w = std::get_if<WhiskerSpec>(&f->variant)) {
      std::vector<int> all = w->multiplicities;
      all.insert(all.end(), ms.begin(), ms.end());
      return {WhiskerSpec{w->base, std::move(all)}};
    }
  }
  return {WhiskerSpec{std::make_shared<const Graph>(base), std::move(ms)}};
}

inline FamilySpec whisker(const FamilySpec& inner, std::vector<int> ms) { return whisker(generate(inner), std::move(ms)); }

/// Short tag used in method chains: "path", "cycle", "ferrers-weak", ...
inline std::string family_tag(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const PathSpec&) const { return "path"; }
    std::string operator()(const CycleSpec&) const { return "cycle"; }
    std::string operator()(const CompleteMultipartiteSpec&) const { return "complete-multipartite"; }
    std::string operator()(const SpiderSpec&) const { return "spider"; }
    std::string operator()(const FerrersSpec& f) const { return f.strict() ? "ferrers" : "ferrers-weak"; }
    std::string operator()(const WhiskerSpec&) const { return "whisker"; }
    std::string operator()(const EmptySpec&) const { return "empty"; }
  };
  return std::visit(Visitor{}, spec.variant);
}

namespace detail {

inline std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::vector<int> split_ints(std::string_view s, std::string_view context) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw DomainError("bad integer list '" + std::string(s) + "' in family '" + std::string(context) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail

/// Family grammar: path:n | cycle:n | complete:n1,n2,... | spider:n1,... |
/// ferrers:l1,... | whisker:<spec>:m1[,m2...] | empty[:n]
inline std::string to_string(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const PathSpec& p) const { return "path:" + std::to_string(p.n); }
    std::string operator()(const CycleSpec& c) const { return "cycle:" + std::to_string(c.n); }
    std::string operator()(const CompleteMultipartiteSpec& c) const { return "complete:" + detail::join_ints(c.parts); }
    std::string operator()(const SpiderSpec& s) const { return "spider:" + detail::join_ints(s.legs); }
    std::string operator()(const FerrersSpec& f) const { return "ferrers:" + detail::join_ints(f.lambda); }
    std::string operator()(const WhiskerSpec& w) const {
      std::string inner;
      if (w.base->family() != nullptr)
        inner = to_string(*w.base->family());
      else
        inner = "graph[n=" + std::to_string(w.base->order()) + ",e=" + std::to_string(w.base->edge_count()) + "]";
      return "whisker:" + inner + ":" + detail::join_ints(w.multiplicities);
    }
    std::string operator()(const EmptySpec& e) const { return "empty:" + std::to_string(e.n); }
  };
  return std::visit(Visitor{}, spec.variant);
}

inline FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto single = [&](std::string_view what) {
    auto xs = detail::split_ints(rest, text);
    detail::require(xs.size() == 1, std::string(what) + " takes one integer");
    return xs[0];
  };
  if (kind == "path") return path(single("path"));
  if (kind == "cycle") return cycle(single("cycle"));
  if (kind == "complete") return complete_multipartite(detail::split_ints(rest, text));
  if (kind == "spider") return spider(detail::split_ints(rest, text));
  if (kind == "ferrers") return ferrers(detail::split_ints(rest, text));
  if (kind == "empty") return empty_family(rest.empty() ? 0 : single("empty"));
  if (kind == "whisker") {
    auto last = rest.rfind(':');
    detail::require(last != std::string_view::npos, "whisker needs whisker:<spec>:m1[,m2...]");
    return whisker(parse_family(rest.substr(0, last)), detail::split_ints(rest.substr(last + 1), text));
  }
  throw DomainError("unknown family '" + std::string(text) + "'");
}

namespace detail {

inline Graph whisker_once(const Graph& g, int m) {
  int n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels;
  if (g.has_labels()) labels = g.labels();
  int next = n;
  for (int v = 0; v < n; ++v)
    for (int k = 1; k <= m; ++k) {
      edges.emplace_back(v, next++);
      if (g.has_labels()) labels.push_back(g.labels()[static_cast<std::size_t>(v)] + "~" + std::to_string(k));
    }
  return Graph(n * (m + 1), edges, std::move(labels));
}

}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const PathSpec& p) const {
      detail::require(p.n >= 1, "path needs n >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
      return Graph(p.n, edges);
    }
    Graph operator()(const CycleSpec& c) const {
      detail::require(c.n >= 3, "cycle needs n >= 3");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < c.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, c.n - 1);
      return Graph(c.n, edges);
    }
    Graph operator()(const CompleteMultipartiteSpec& c) const {
      detail::require(!c.parts.empty(), "complete multipartite graph needs at least one part");
      std::vector<int> part_of;
      for (std::size_t p = 0; p < c.parts.size(); ++p) {
        detail::require(c.parts[p] >= 1, "part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(c.parts[p]), static_cast<int>(p));
      }
      int n = static_cast<int>(part_of.size());
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
      return Graph(n, edges);
    }
    Graph operator()(const SpiderSpec& s) const {
      detail::require(s.legs.size() >= 3, "a spider needs at least three legs");
      detail::require(std::is_sorted(s.legs.begin(), s.legs.end()), "spider legs must be sorted ascending");
      detail::require(s.legs.front() >= 1, "spider legs must have length >= 1");
      std::vector<Edge> edges;
      std::vector<std::string> labels{"0"};
      int next = 1;
      for (std::size_t r = 0; r < s.legs.size(); ++r) {
        int prev = 0;
        for (int i = 1; i <= s.legs[r]; ++i) {
          edges.emplace_back(prev, next);
          labels.push_back(std::to_string(r + 1) + "," + std::to_string(i));
          prev = next++;
        }
      }
      return Graph(next, edges, std::move(labels));
    }
    Graph operator()(const FerrersSpec& f) const {
      detail::require(!f.lambda.empty(), "ferrers sequence must be nonempty");
      detail::require(f.lambda.back() > 0, "ferrers parts must be positive");
      for (std::size_t i = 1; i < f.lambda.size(); ++i)
        detail::require(f.lambda[i] <= f.lambda[i - 1], "ferrers sequence must be decreasing");
      int m = static_cast<int>(f.lambda.size());
      int n = m + f.lambda.front();
      std::vector<Edge> edges;
      std::vector<std::string> labels;
      for (int i = 1; i <= m; ++i) labels.push_back("v" + std::to_string(i));
      for (int j = 1; j <= f.lambda.front(); ++j) labels.push_back("w" + std::to_string(j));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < f.lambda[static_cast<std::size_t>(i)]; ++j) edges.emplace_back(i, m + j);
      return Graph(n, edges, std::move(labels));
    }
    Graph operator()(const WhiskerSpec& w) const {
      detail::require(w.base != nullptr, "whiskering needs a base graph");
      detail::require(!w.multiplicities.empty(), "whiskering needs at least one multiplicity");
      Graph g = w.base->without_family();
      for (int m : w.multiplicities) {
        detail::require(m > 0, "whisker multiplicities must be positive");
        g = detail::whisker_once(g, m);
      }
      return g;
    }
    Graph operator()(const EmptySpec& e) const {
      detail::require(e.n >= 0, "empty graph needs n >= 0");
      return Graph(e.n);
    }
  };
  Graph g = std::visit(Visitor{}, spec.variant);
  return g.with_family(std::make_shared<const FamilySpec>(spec));
}

}  // namespace exdepth
