#include <gtest/gtest.h>

#include <random>

#include "exdepth/families.hpp"
#include "exdepth/hochster.hpp"
#include "exdepth/invariants.hpp"
#include "exdepth/search.hpp"

using namespace exdepth;

namespace {

// Reduced Euler characteristic from face counts, sum over d >= -1 of (-1)^d f_d.
long euler_from_faces(const SimplicialComplex& c) {
  long chi = 0;
  for (std::size_t k = 0; k < c.faces.size(); ++k) chi += (k % 2 ? 1 : -1) * static_cast<long>(c.faces[k].size());
  return chi;
}

long euler_from_homology(const std::vector<long>& h) {
  long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? 1 : -1) * h[k];
  return chi;
}

// Components of the 1-skeleton of Ind(G[within]) = components of the complement graph.
int skeleton_components(const Graph& g, VertexSet within) {
  std::vector<Edge> edges;
  auto vs = bits::to_vector(within);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return static_cast<int>(components(Graph(static_cast<int>(vs.size()), edges)).size());
}

}  // namespace

TEST(Complex, PathThree) {
  auto c = independence_complex(generate(path(3)));
  EXPECT_EQ(c.dim(), 1);
  EXPECT_EQ(c.face_count(), 5u);
  EXPECT_EQ(c.facets(), (std::vector<VertexSet>{0b010, 0b101}));
  EXPECT_EQ(reduced_homology_dims(c), (std::vector<long>{1, 0}));
}

TEST(Complex, VoidAndEmpty) {
  auto c = independence_complex(Graph(0));
  EXPECT_EQ(c.dim(), -1);
  EXPECT_EQ(reduced_homology(c), std::vector<long>{1});
  auto simplex = independence_complex(Graph(3));
  EXPECT_EQ(simplex.dim(), 2);
  for (long h : reduced_homology(simplex)) EXPECT_EQ(h, 0);
}

TEST(Complex, CyclesMatchKnownHomotopyTypes) {
  // Ind(C_n) is a wedge of two (k-1)-spheres for n = 3k and one (k-1)-sphere
  // for n = 3k +- 1.
  for (int n = 3; n <= 11; ++n) {
    auto h = reduced_homology(independence_complex(generate(cycle(n))));
    int k = (n + 1) / 3;
    std::vector<long> want(h.size(), 0);
    ASSERT_LT(static_cast<std::size_t>(k), want.size());
    want[static_cast<std::size_t>(k)] = n % 3 == 0 ? 2 : 1;
    EXPECT_EQ(h, want) << "C" << n;
  }
}

TEST(Complex, CapsAreEnforced) {
  EXPECT_THROW(independence_complex(Graph(17)), CapExceeded);
  EXPECT_THROW(independence_complex(Graph(12), bits::full(12), 100), CapExceeded);
  EXPECT_THROW(multigraded_betti(generate(path(17))), CapExceeded);
}

TEST(HomologyProperty, EulerCharacteristicAndComponents) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.5, rng);
    auto c = independence_complex(g);
    auto h = reduced_homology(c);
    EXPECT_EQ(euler_from_homology(h), euler_from_faces(c));
    ASSERT_GE(h.size(), 2u);
    EXPECT_EQ(h[0], 0);
    EXPECT_EQ(h[1], skeleton_components(g, g.vertex_mask()) - 1);
    for (long x : h) EXPECT_GE(x, 0);
  }
}

TEST(Betti, TriangleResolution) {
  auto b = multigraded_betti(generate(cycle(3)));
  EXPECT_EQ(b.coarse(0, 0), 1);
  EXPECT_EQ(b.coarse(1, 2), 3);
  EXPECT_EQ(b.coarse(2, 3), 2);
  EXPECT_EQ(b.total(1), 3);
  EXPECT_EQ(b.fine(2, 0b111), 2);
  EXPECT_EQ(b.pd_S, 2);
  EXPECT_EQ(b.depth_S, 1);
  EXPECT_EQ(b.reg, 1);
  EXPECT_EQ(b.max_shift, 3);
  auto dv = depth_and_variety(b);
  EXPECT_EQ(dv.depth_E, 0);
  EXPECT_EQ(dv.variety, CoordinateSubspaceUnion::whole(3));
}

TEST(Betti, TableLayout) {
  auto b = multigraded_betti(generate(cycle(3)));
  EXPECT_EQ(render_betti_table(b), "   0 1 2\n0: 1 - -\n1: - 3 2\n");
}

TEST(Betti, EdgelessGraphIsFree) {
  auto b = multigraded_betti(Graph(3));
  ASSERT_EQ(b.entries.size(), 1u);
  EXPECT_EQ(b.depth_S, 3);
  auto dv = depth_and_variety(b);
  EXPECT_EQ(dv.depth_E, 3);
  EXPECT_EQ(dv.variety, CoordinateSubspaceUnion::single(3, 0b111));
}

TEST(BettiProperty, LinearStrandStartsWithEdges) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    auto b = multigraded_betti(g);
    EXPECT_EQ(b.fine(0, 0), 1);
    EXPECT_EQ(b.total(0), 1);
    EXPECT_EQ(b.total(1), static_cast<long>(g.edge_count()));
    for (auto [u, v] : g.edges()) EXPECT_EQ(b.fine(1, bits::bit(u) | bits::bit(v)), 1);
    // Regularity lies between the induced matching number and the largest minimal vertex cover.
    if (g.edge_count() > 0) {
      EXPECT_GE(b.reg, induced_matching_number(g));
      EXPECT_LE(b.reg, max_minimal_vertex_cover(g));
    }
  }
}

TEST(BettiProperty, ConeSkipDoesNotChangeAnything) {
  std::mt19937_64 rng(61);
  HochsterOptions full;
  full.skip_cone_points = false;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.4, rng);
    auto a = multigraded_betti(g), b = multigraded_betti(g, full);
    EXPECT_EQ(a.entries, b.entries);
    EXPECT_EQ(hochster_depth_only(g), depth_and_variety(a).depth_E);
  }
}
