#include <gtest/gtest.h>

#include <map>
#include <random>

#include "exdepth/exterior.hpp"
#include "exdepth/families.hpp"
#include "exdepth/search.hpp"

using namespace exdepth;

namespace {

// Independent model of E/I_E(G): monomials are sorted vertex lists, a vector
// is a map from monomial to coefficient, and products are computed by
// inserting the new variable and counting the transpositions.
using Monomial = std::vector<int>;
using Element = std::map<Monomial, mpq_class>;

bool survives(const Graph& g, const Monomial& m) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (g.adjacent(m[a], m[b])) return false;
  return true;
}

std::vector<Monomial> monomials(const Graph& g) {
  std::vector<Monomial> out;
  for (VertexSet s = 0; s <= bits::full(g.order()); ++s) {
    Monomial m = bits::to_vector(s);
    if (survives(g, m)) out.push_back(m);
  }
  return out;
}

Element times(const Graph& g, const std::vector<mpq_class>& l, const Monomial& m) {
  Element out;
  for (int i = 0; i < g.order(); ++i) {
    if (l[static_cast<std::size_t>(i)] == 0 || std::find(m.begin(), m.end(), i) != m.end()) continue;
    Monomial r = m;
    auto pos = std::lower_bound(r.begin(), r.end(), i);
    long swaps = pos - r.begin();
    r.insert(pos, i);
    if (!survives(g, r)) continue;
    out[r] += (swaps % 2 ? -1 : 1) * l[static_cast<std::size_t>(i)];
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  if (a.empty()) return 0;
  std::size_t cols = a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rows are images of basis monomials, columns are target monomials.
std::size_t oracle_rank(const Graph& g, const std::vector<mpq_class>& l) {
  auto basis = monomials(g);
  std::map<Monomial, std::size_t> pos;
  for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& m : basis) {
    std::vector<mpq_class> row(basis.size());
    for (const auto& [t, c] : times(g, l, m)) row[pos.at(t)] = c;
    rows.push_back(std::move(row));
  }
  return dense_rank(rows);
}

linalg::DenseRational dense_product(const linalg::RationalMatrix& a, const linalg::RationalMatrix& b) {
  auto da = linalg::to_dense(a), db = linalg::to_dense(b);
  linalg::DenseRational out(a.rows, std::vector<mpq_class>(b.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (da[i][k] != 0)
        for (std::size_t j = 0; j < b.cols; ++j) out[i][j] += da[i][k] * db[k][j];
  return out;
}

LinearForm random_form(int n, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  LinearForm l;
  do {
    l.coeffs.clear();
    for (int i = 0; i < n; ++i) l.coeffs.emplace_back(dist(rng));
  } while (l.is_zero());
  return l;
}

}  // namespace

TEST(Exterior, WedgeSign) {
  EXPECT_EQ(wedge_sign(2, 0b011), 1);
  EXPECT_EQ(wedge_sign(1, 0b101), -1);
  EXPECT_EQ(wedge_sign(0, 0b110), 1);
}

TEST(Exterior, QuotientBasisOfFiveCycle) {
  QuotientBasis b(generate(cycle(5)));
  EXPECT_EQ(b.dim(), 11u);
  EXPECT_EQ(b.sets().front(), 0u);
  EXPECT_TRUE(std::is_sorted(b.sets().begin(), b.sets().end(), bits::graded_less));
  EXPECT_TRUE(b.index(0b00101).has_value());
  EXPECT_FALSE(b.index(0b00011).has_value());
  EXPECT_THROW(QuotientBasis(Graph(30), 1000), CapExceeded);
}

TEST(Exterior, MultiplicationMatrixOfPathThree) {
  // Basis 1, e1, e2, e3, e1e3. ℓ = e1 - e3 sends 1 -> e1 - e3, e1 -> e1e3,
  // e3 -> e1e3, e2 -> 0, e1e3 -> 0.
  Graph p3 = generate(path(3));
  auto m = multiplication_matrix(p3, LinearForm{1, 0, -1});
  auto d = linalg::to_dense(m);
  linalg::DenseRational want{{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 1, 0, 1, 0}};
  EXPECT_EQ(d, want);
  EXPECT_EQ(multiplication_rank(QuotientBasis(p3), LinearForm{1, 0, -1}), 2u);
}

TEST(Exterior, RegularityExamples) {
  EXPECT_TRUE(is_regular(Graph(1), LinearForm{1}));
  EXPECT_TRUE(is_regular(Graph(2), LinearForm{1, -1}));
  EXPECT_FALSE(is_regular(generate(path(2)), LinearForm{1, 1}));  // dimension 3 is odd
  EXPECT_TRUE(is_regular(generate(path(4)), LinearForm{1, 0, 0, -1}));
  EXPECT_THROW(is_regular(Graph(2), LinearForm{0, 0}), DomainError);
  EXPECT_THROW(is_regular(Graph(2), LinearForm{1}), DomainError);
}

TEST(ExteriorProperty, RankMatchesIndependentModel) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.4, rng);
    LinearForm l = random_form(n, rng, trial % 2 ? 1 : 50);
    QuotientBasis b(g);
    std::size_t want = oracle_rank(g, l.coeffs);
    ASSERT_EQ(multiplication_rank(b, l), want) << serialize(g);
    EXPECT_EQ(is_regular(b, l), 2 * want == b.dim());
  }
}

TEST(ExteriorProperty, SquareIsZero) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.35, rng);
    auto m = multiplication_matrix(g, random_form(n, rng, 9));
    for (const auto& row : dense_product(m, m))
      for (const auto& x : row) ASSERT_EQ(x, 0);
  }
}

TEST(ExteriorProperty, ScalingDoesNotChangeRank) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.35, rng);
    QuotientBasis b(g);
    LinearForm l = random_form(n, rng, 5);
    LinearForm scaled = l;
    for (auto& c : scaled.coeffs) c *= mpq_class(-7, 3);
    EXPECT_EQ(multiplication_rank(b, l), multiplication_rank(b, scaled));
    EXPECT_EQ(is_regular(b, l), is_regular(b, scaled));
  }
}

TEST(Colon, PathThreeEnds) {
  auto r = colon_space(generate(path(3)), 0, 2);
  EXPECT_EQ(r.image_dim, 2u);
  EXPECT_EQ(r.kernel_dim, 3u);
  EXPECT_EQ(r.predicted_dim, 3u);
  EXPECT_TRUE(r.equal);
  EXPECT_FALSE(r.regular);
  ASSERT_TRUE(r.kernel.has_value());
  EXPECT_EQ(r.kernel->size(), 3u);
  EXPECT_FALSE(colon_space(generate(path(3)), 0, 2, false).kernel.has_value());
  EXPECT_THROW(colon_space(generate(path(3)), 1, 1), DomainError);
}

TEST(Colon, SeparatedPairIsRegular) {
  // Endpoints of P4: closed neighbourhoods are disjoint and N(1), N(4) are joined.
  auto r = colon_space(generate(path(4)), 0, 3);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.kernel_dim, r.image_dim);
}

TEST(ColonProperty, JoinedNeighbourhoodsGiveRegularDifference) {
  std::mt19937_64 rng(43);
  int hits = 0;
  for (int trial = 0; trial < 400 && hits < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.45, rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if ((g.closed_neighbor_mask(i) & g.closed_neighbor_mask(j)) != 0) continue;
        bool joined = true;
        for (int a : g.neighbors(i))
          for (int b : g.neighbors(j)) joined = joined && g.adjacent(a, b);
        if (!joined) continue;
        ++hits;
        LinearForm l;
        l.coeffs.assign(static_cast<std::size_t>(n), 0);
        l.coeffs[static_cast<std::size_t>(i)] = 1;
        l.coeffs[static_cast<std::size_t>(j)] = -1;
        EXPECT_TRUE(is_regular(g, l)) << serialize(g) << i << ' ' << j;
        EXPECT_TRUE(colon_space(g, i, j, false).regular);
      }
  }
  EXPECT_GE(hits, 20);
}

TEST(RankOracle, SubspaceSingularity) {
  EXPECT_FALSE(subspace_is_singular(Graph(1), 0b1, 3, 0));
  EXPECT_TRUE(subspace_is_singular(generate(path(2)), 0b11, 3, 0));
  EXPECT_THROW(subspace_is_singular(Graph(2), 0, 3, 0), DomainError);
  EXPECT_THROW(subspace_is_singular(Graph(2), 0b100, 3, 0), DomainError);
  EXPECT_THROW(subspace_is_singular(Graph(2), 0b1, 0, 0), DomainError);
}

TEST(RankOracle, EdgelessAndOddDimension) {
  auto r = depth_via_rank_variety(Graph(3));
  EXPECT_EQ(r.depth, 3);
  ASSERT_TRUE(r.variety.has_value());
  EXPECT_EQ(*r.variety, CoordinateSubspaceUnion::single(3, 0b111));
  auto k2 = depth_via_rank_variety(generate(path(2)));
  EXPECT_EQ(k2.depth, 0);
  EXPECT_EQ(*k2.variety, CoordinateSubspaceUnion::whole(2));
  EXPECT_THROW(depth_via_rank_variety(generate(path(15))), CapExceeded);
}

TEST(RankOracle, SeedDoesNotChangeTheAnswer) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, 0.4, rng);
    RankVarietyOptions a, b;
    b.seed = 12345;
    b.trials = 1;
    auto ra = depth_via_rank_variety(g, a), rb = depth_via_rank_variety(g, b);
    EXPECT_EQ(ra.depth, rb.depth);
    EXPECT_EQ(ra.variety, rb.variety);
    RankVarietyOptions fast = a;
    fast.full_variety = false;
    EXPECT_EQ(depth_via_rank_variety(g, fast).depth, ra.depth);
  }
}
