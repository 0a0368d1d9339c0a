#include <gtest/gtest.h>

#include "exdepth/depth.hpp"

using namespace exdepth;
using V = CoordinateSubspaceUnion;

namespace {

Graph untagged(const FamilySpec& f) { return generate(f).without_family(); }

DepthVarietyResult oracle(const Graph& g) { return depth_and_variety(g); }

void expect_matches_oracle(const Graph& g, const DepthReport& r) {
  auto o = oracle(g);
  EXPECT_EQ(r.depth_E, o.depth_E);
  if (r.variety) EXPECT_EQ(*r.variety, o.variety) << r.variety->render() << " vs " << o.variety.render();
}

}  // namespace

TEST(Closed, PathAndCycle) {
  EXPECT_EQ(path_depth(1), 1);
  EXPECT_EQ(path_depth(4), 1);
  EXPECT_EQ(path_depth(5), 0);
  EXPECT_EQ(path_variety(4, {0, 1, 2, 3}), V(4, {0b0001, 0b1000}));
  EXPECT_EQ(path_variety(3, {0, 1, 2}), V::whole(3));
  EXPECT_EQ(cycle_depth_S(3), 1);
  EXPECT_EQ(cycle_depth_S(4), 1);
  EXPECT_EQ(cycle_depth_S(5), 2);
  EXPECT_EQ(cycle_depth_S(7), 2);
}

TEST(Closed, SpiderOneTwoThreeFour) {
  auto f = spider_formula({1, 2, 3, 4});
  EXPECT_EQ(f.p, 2);
  EXPECT_EQ(f.q, 1);
  EXPECT_EQ(f.depth, 1);
  Graph g = generate(spider({1, 2, 3, 4}));
  EXPECT_EQ(f.variety, oracle(g).variety);
  EXPECT_EQ(f.variety.render(g), "V(x_{2,2}) ∪ V(x_{1,1},x_{4,1}) ∪ V(x_{1,1},x_{4,4})");
}

TEST(Closed, Ferrers) {
  EXPECT_EQ(ferrers_depth({3, 2, 1}), std::make_pair(3, 2));
  EXPECT_EQ(ferrers_depth({1}), std::make_pair(1, 0));
  EXPECT_THROW(ferrers_depth({2, 2}), DomainError);
  EXPECT_THROW(ferrers_depth({}), DomainError);
  Graph g = generate(ferrers({4, 2, 1}));
  EXPECT_EQ(ferrers_sequence(g), (std::vector<int>{4, 2, 1}));
  EXPECT_TRUE(ferrers_formula_eligible(g.without_family()));
  EXPECT_FALSE(ferrers_formula_eligible(untagged(ferrers({2, 2, 1}))));
  EXPECT_FALSE(ferrers_sequence(untagged(cycle(6))).has_value());
}

TEST(Closed, FerrersStaircaseAttainsBipartiteBound) {
  // λ = (m, m-1, ..., 1) on 2m vertices has depth_E = m - 1 = n/2 - 1.
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> lambda;
    for (int k = m; k >= 1; --k) lambda.push_back(k);
    Graph g = generate(ferrers(lambda));
    auto r = depth_exterior(g);
    EXPECT_EQ(r.depth_E, m - 1);
    EXPECT_EQ(r.method, std::vector<std::string>{"ferrers-formula"});
    EXPECT_EQ(oracle(g).depth_E, m - 1);
    EXPECT_EQ(r.bounds.attained_bipartite, true);
  }
}

TEST(Closed, Whiskering) {
  EXPECT_EQ(whisker_depth(generate(cycle(4)), {1}), 2);
  EXPECT_EQ(oracle(generate(whisker(generate(cycle(4)), {1}))).depth_E, 2);
  EXPECT_EQ(whisker_depth(generate(complete(3)), {2}), 4);
  EXPECT_EQ(whisker_depth(generate(path(3)), {1, 1}), 3);
  EXPECT_EQ(whisker_depth(generate(path(3)), {2, 1, 3}), 27);
  EXPECT_THROW(whisker_depth(generate(path(3)), {}), DomainError);
  EXPECT_THROW(whisker_depth(generate(path(3)), {0}), DomainError);
  for (auto spec : {whisker(generate(cycle(4)), {1}), whisker(generate(complete(3)), {2}),
                    whisker(generate(path(3)), {1, 1}), whisker(generate(path(2)), {1, 2}),
                    whisker(generate(complete_multipartite({2, 2})), {1})}) {
    Graph g = generate(spec);
    auto r = depth_exterior(g);
    EXPECT_EQ(r.method, std::vector<std::string>{"whisker-formula"});
    EXPECT_EQ(r.depth_E, oracle(g).depth_E) << to_string(spec);
  }
}

TEST(Dispatch, EmptyAndEdgeless) {
  auto e = depth_exterior(Graph(0));
  EXPECT_EQ(e.depth_E, 0);
  EXPECT_EQ(e.method, std::vector<std::string>{"empty"});
  auto r = depth_exterior(Graph(3));
  EXPECT_EQ(r.depth_E, 3);
  EXPECT_EQ(r.cx_E, 0);
  EXPECT_EQ(r.variety, V::single(3, 0b111));
  EXPECT_EQ(r.method, std::vector<std::string>{"isolated-vertices(3)"});
  EXPECT_FALSE(r.bounds.applies);
}

TEST(Dispatch, FamilyTagsAndProbes) {
  auto p = depth_exterior(generate(path(4)));
  EXPECT_EQ(p.method, std::vector<std::string>{"path-formula"});
  EXPECT_EQ(p.variety, V(4, {0b0001, 0b1000}));
  auto q = depth_exterior(untagged(path(4)));
  EXPECT_EQ(q.method, std::vector<std::string>{"path-probe"});
  EXPECT_EQ(q.variety, p.variety);

  auto c = depth_exterior(generate(cycle(5)));
  EXPECT_EQ(c.method, std::vector<std::string>{"cycle-formula"});
  EXPECT_EQ(c.depth_E, 0);
  EXPECT_EQ(c.depth_S, 2);
  EXPECT_EQ(depth_exterior(untagged(cycle(7))).method, std::vector<std::string>{"cycle-probe"});

  auto k = depth_exterior(generate(complete_multipartite({2, 3})));
  EXPECT_EQ(k.method, std::vector<std::string>{"complete-multipartite-formula"});
  EXPECT_EQ(k.depth_E, 0);
  EXPECT_EQ(depth_exterior(untagged(complete(4))).method, std::vector<std::string>{"universal-vertex"});
  EXPECT_EQ(depth_exterior(generate(spider({1, 2, 3}))).method, std::vector<std::string>{"spider-formula"});
}

TEST(Dispatch, SpiderWithAllLegsDivisibleByThreeUsesTreeRecursion) {
  Graph g = generate(spider({3, 3, 3}));
  auto r = depth_exterior(g);
  EXPECT_EQ(r.method, std::vector<std::string>{"tree-recursion"});
  expect_matches_oracle(g, r);
  EXPECT_EQ(r.depth_E, 1);
  EXPECT_EQ(r.variety->render(g), "V(x_{0}) ∪ V(x_{1,3}) ∪ V(x_{2,3}) ∪ V(x_{3,3})");
}

TEST(Dispatch, IsolatedVerticesAndComponents) {
  Graph g = add_isolated_vertex(untagged(path(4)));
  auto r = depth_exterior(g);
  EXPECT_EQ(r.depth_E, 2);
  EXPECT_EQ(r.method, (std::vector<std::string>{"isolated-vertices(1)", "path-probe"}));
  EXPECT_EQ(r.variety, V(5, {0b10001, 0b11000}));
  expect_matches_oracle(g, r);

  Graph two = disjoint_union(untagged(path(4)), untagged(cycle(3)));
  auto u = depth_exterior(two);
  EXPECT_EQ(u.method, (std::vector<std::string>{"disjoint-union(2)", "  [1] path-probe", "  [2] cycle-probe"}));
  expect_matches_oracle(two, u);
  EXPECT_FALSE(u.depth_S.has_value());

  Graph pp = disjoint_union(untagged(path(4)), untagged(path(4)));
  auto w = depth_exterior(pp);
  EXPECT_EQ(w.depth_E, 2);
  expect_matches_oracle(pp, w);
}

TEST(Dispatch, DuplicateVertexRule) {
  // C5 with vertex 1 doubled: the twin's removal leaves the cycle.
  Graph g(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}});
  auto r = depth_exterior(g, {Method::Formula});
  EXPECT_EQ(r.depth_E, 0);
  EXPECT_EQ(r.method, (std::vector<std::string>{"duplicate-vertex", "  cycle-probe"}));
  EXPECT_EQ(oracle(g).depth_E, 0);
}

TEST(Dispatch, OracleFallbackAndMethods) {
  // Two triangles sharing a vertex plus a pendant path: no formula applies.
  Graph g(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  auto r = depth_exterior(g);
  EXPECT_EQ(r.method, std::vector<std::string>{"hochster-oracle"});
  ASSERT_TRUE(r.depth_S && r.pd_S && r.reg);
  EXPECT_EQ(*r.depth_S + *r.pd_S, 7);
  EXPECT_THROW(depth_exterior(g, {Method::Formula}), CapExceeded);
  auto rank = depth_exterior(g, {Method::Rank});
  EXPECT_EQ(rank.method, std::vector<std::string>{"rank-variety"});
  EXPECT_EQ(rank.depth_E, r.depth_E);
  EXPECT_EQ(rank.variety, r.variety);
  auto forced = depth_exterior(generate(path(4)), {Method::Oracle});
  EXPECT_EQ(forced.method, std::vector<std::string>{"hochster-oracle"});
  EXPECT_EQ(forced.depth_E, 1);
}

TEST(Dispatch, Refusal) {
  std::vector<Edge> edges{{0, 2}};
  for (int i = 0; i < 17; ++i) edges.emplace_back(i, (i + 1) % 17);
  Graph g(17, edges);
  try {
    depth_exterior(g);
    FAIL() << "expected a refusal";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("hochster-oracle: n <= 16"), std::string::npos);
  }
  EXPECT_THROW(depth_exterior(g, {Method::Oracle}), CapExceeded);
  EXPECT_THROW(depth_exterior(untagged(path(70))), CapExceeded);
  auto big = depth_exterior(generate(path(70)));
  EXPECT_EQ(big.depth_E, 1);
  EXPECT_FALSE(big.variety.has_value());
  EXPECT_EQ(depth_exterior(generate(cycle(80))).depth_E, 0);
}

TEST(Dispatch, ParseMethod) {
  EXPECT_EQ(parse_method("rank"), Method::Rank);
  EXPECT_EQ(to_string(Method::Formula), "formula");
  EXPECT_THROW(parse_method("fast"), DomainError);
}

TEST(Trees, FigureTreeAndForests) {
  Graph g(8, std::vector<Edge>{{2, 4}, {3, 4}, {4, 5}, {1, 5}, {5, 6}, {6, 0}, {6, 7}});
  auto r = tree_depth_and_variety(g);
  expect_matches_oracle(g, r);
  Graph forest = disjoint_union(untagged(path(4)), untagged(spider({1, 2, 3})));
  expect_matches_oracle(forest, tree_depth_and_variety(forest));
  EXPECT_THROW(tree_depth_and_variety(untagged(cycle(4))), DomainError);
}

TEST(Bounds, Examples) {
  auto p4 = bounds_report(untagged(path(4)), 1);
  EXPECT_TRUE(p4.attained_general);
  EXPECT_EQ(p4.bipartite, 1);
  EXPECT_EQ(p4.attained_bipartite, true);
  EXPECT_EQ(p4.extremal_shape, true);

  Graph wk3 = generate(whisker(generate(complete(3)), {2}));
  auto b = bounds_report(wk3, 4);
  EXPECT_DOUBLE_EQ(b.general, 4.0);
  EXPECT_TRUE(b.attained_general);
  EXPECT_FALSE(b.bipartite.has_value());
  EXPECT_EQ(b.extremal_shape, true);
  EXPECT_FALSE(bounds_report(wk3, 5).satisfied_general);

  auto c5 = bounds_report(untagged(cycle(5)), 0);
  EXPECT_FALSE(c5.attained_general);
  EXPECT_TRUE(c5.satisfied_general);
  EXPECT_FALSE(c5.extremal_shape.has_value());

  EXPECT_TRUE(is_complete_whiskering_shape(untagged(path(4)), 2));
  EXPECT_FALSE(is_complete_whiskering_shape(untagged(spider({1, 1, 1})), 2));
  EXPECT_TRUE(is_complete_whiskering_shape(generate(whisker(generate(complete(4)), {3})), 4));
  EXPECT_FALSE(is_complete_whiskering_shape(generate(whisker(generate(cycle(4)), {3})), 4));
}
