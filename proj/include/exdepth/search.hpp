#pragma once

// Small-graph search for graphs attaining (or beating) the depth bounds.
//
// Exhaustive mode walks every edge subset of K_n, so it is limited to
// n <= 7 (2^21 graphs at n = 7, roughly an hour; n = 5 takes well under a
// second). Random mode samples G(n, p) graphs with a fixed budget.

#include <random>
#include <string>
#include <vector>

#include "exdepth/cache.hpp"
#include "exdepth/depth.hpp"

namespace exdepth {

enum class SearchMode { Exhaustive, Random };

struct SearchOptions {
  int n = 4;
  SearchMode mode = SearchMode::Exhaustive;
  bool bipartite_only = false;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  DepthOptions depth;
};

struct SearchCandidate {
  Graph graph;
  DepthReport report;
};

struct SearchResult {
  std::size_t examined = 0;
  int max_depth = -1;
  std::vector<SearchCandidate> attainers;
  /// Graphs whose depth exceeds a bound; any entry falsifies it.
  std::vector<SearchCandidate> violations;
};

inline constexpr int kMaxExhaustiveN = 7;

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random sides, then each cross pair independently with probability p.
inline Graph random_bipartite_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p), side(0.5);
  std::vector<char> left(static_cast<std::size_t>(n));
  for (auto& l : left) l = side(rng);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (left[static_cast<std::size_t>(u)] != left[static_cast<std::size_t>(v)] && coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline SearchResult search_bounds(const SearchOptions& opt, ResultCache* cache = nullptr) {
  if (opt.n < 1) throw DomainError("search needs n >= 1");
  if (opt.mode == SearchMode::Exhaustive && opt.n > kMaxExhaustiveN)
    throw CapExceeded("exhaustive search is limited to n <= " + std::to_string(kMaxExhaustiveN) +
                      "; use random mode for larger n");
  SearchResult out;
  auto consider = [&](const Graph& g) {
    if (!isolated_vertices(g).empty()) return;
    if (opt.bipartite_only && !bipartition(g)) return;
    ++out.examined;
    DepthReport r = report_from_json(Json::parse(cached_depth_json(g, opt.depth, cache)));
    const auto& b = r.bounds;
    bool attained = opt.bipartite_only ? b.attained_bipartite.value_or(false) : b.attained_general;
    bool violated = !b.satisfied_general || !b.satisfied_bipartite.value_or(true);
    if (r.depth_E > out.max_depth) out.max_depth = r.depth_E;
    if (violated) out.violations.push_back({g, r});
    if (attained) out.attainers.push_back({g, std::move(r)});
  };
  if (opt.mode == SearchMode::Exhaustive) {
    std::uint64_t pairs = static_cast<std::uint64_t>(opt.n) * (opt.n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) consider(graph_from_edge_mask(opt.n, mask));
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    for (std::size_t k = 0; k < opt.budget; ++k) {
      double p = density(rng);
      consider(opt.bipartite_only ? random_bipartite_graph(opt.n, p, rng) : random_graph(opt.n, p, rng));
    }
  }
  return out;
}

}  // namespace exdepth
