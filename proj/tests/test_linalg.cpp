#include <gtest/gtest.h>

#include <random>

#include "exdepth/linalg.hpp"

using namespace exdepth::linalg;

namespace {

// Independent oracle: dense Gaussian elimination over Q, row-wise.
std::size_t dense_rank(DenseRational a) {
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

IntMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::int64_t bound, std::mt19937_64& rng) {
  IntMatrix m(rows, cols);
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<std::int64_t> value(-bound, bound);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (coin(rng)) m.push(r, c, value(rng));
  return m;
}

}  // namespace

TEST(Linalg, SmallExamples) {
  IntMatrix m(3, 3);
  m.push(0, 0, 1);
  m.push(1, 0, 2);
  m.push(0, 1, 2);
  m.push(1, 1, 4);
  m.push(2, 2, 5);
  EXPECT_EQ(exact_rank(m), 2u);
  EXPECT_EQ(rank_mod_p(m), 2u);
  EXPECT_EQ(exact_rank(IntMatrix(0, 0)), 0u);
  EXPECT_EQ(exact_rank(IntMatrix(4, 3)), 0u);
}

TEST(Linalg, FinalizeMergesAndDropsZeros) {
  IntMatrix m(2, 1);
  m.push(1, 0, 3);
  m.push(0, 0, 1);
  m.push(1, 0, -3);
  m.finalize();
  ASSERT_EQ(m.columns[0].size(), 1u);
  EXPECT_EQ(m.columns[0][0].first, 0u);
  EXPECT_EQ(m.nonzeros(), 1u);
}

TEST(Linalg, ModularRankCanDropBelowExactRank) {
  // det = p, so the matrix is singular mod p but regular over Q.
  const std::int64_t p = 7;
  IntMatrix m(2, 2);
  m.push(0, 0, 1);
  m.push(1, 0, 2);
  m.push(0, 1, 3);
  m.push(1, 1, 6 + p);
  EXPECT_EQ(exact_rank(m), 2u);
  EXPECT_EQ(rank_mod_p(m, 7), 1u);
}

TEST(Linalg, OverflowFallsBackToBigIntegers) {
  // Entries near 2^62 force the checked 64-bit path to overflow.
  const std::int64_t big = std::int64_t{1} << 62;
  IntMatrix m(3, 3);
  m.push(0, 0, big - 1);
  m.push(2, 0, big - 3);
  m.push(0, 1, big - 5);
  m.push(2, 1, big - 7);
  m.push(1, 2, 1);
  m.push(2, 2, big - 11);
  BigIntMatrix b(3, 3);
  for (std::size_t c = 0; c < 3; ++c)
    for (auto [r, v] : m.columns[c]) b.push(r, c, mpz_class(static_cast<long>(v)));
  EXPECT_EQ(exact_rank(m), dense_rank(to_dense(b)));
  EXPECT_EQ(exact_rank(m), exact_rank(b));

  // A genuinely rank-deficient one with huge entries: column 2 = column 0 + column 1.
  IntMatrix d(2, 3);
  d.push(0, 0, big / 2);
  d.push(1, 0, 3);
  d.push(0, 1, big / 4);
  d.push(1, 1, big / 2);
  BigIntMatrix db(2, 3);
  for (std::size_t c = 0; c < 2; ++c)
    for (auto [r, v] : d.columns[c]) db.push(r, c, mpz_class(static_cast<long>(v)));
  db.push(0, 2, mpz_class(static_cast<long>(big / 2)) + mpz_class(static_cast<long>(big / 4)));
  db.push(1, 2, mpz_class(3) + mpz_class(static_cast<long>(big / 2)));
  EXPECT_EQ(exact_rank(db), 2u);
}

TEST(LinalgProperty, ExactRankMatchesDenseOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    std::int64_t bound = trial % 3 == 0 ? 1 : (trial % 3 == 1 ? 5 : 1'000'000);
    IntMatrix m = random_matrix(rows, cols, 0.4, bound, rng);
    // Plant dependencies half of the time.
    if (trial % 2 == 0 && cols >= 3) {
      m.columns[cols - 1].clear();
      for (auto [r, v] : m.columns[0]) m.push(r, cols - 1, 2 * v);
      for (auto [r, v] : m.columns[1]) m.push(r, cols - 1, -v);
      m.finalize();
    }
    std::size_t expected = dense_rank(to_dense(m));
    ASSERT_EQ(exact_rank(m), expected);
    EXPECT_LE(rank_mod_p(m), expected);
    EXPECT_EQ(rank_mod_p(m), expected);  // a random minor vanishing mod 2^61 - 1 is vanishingly unlikely
  }
}

TEST(LinalgProperty, KernelBasisIsAKernel) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    IntMatrix m = random_matrix(rows, cols, 0.5, 4, rng);
    DenseRational k = kernel_basis(m);
    std::size_t rank = dense_rank(to_dense(m));
    ASSERT_EQ(k.size(), cols - rank);
    EXPECT_EQ(dense_rank(k), k.size());
    DenseRational a = to_dense(m);
    for (const auto& v : k)
      for (std::size_t r = 0; r < rows; ++r) {
        mpq_class s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * v[c];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Linalg, RrefPivots) {
  DenseRational a{{0, 2, 4}, {0, 1, 2}, {1, 0, 1}};
  auto pivots = rref(a);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (std::vector<mpq_class>{1, 0, 1}));
  EXPECT_EQ(a[1], (std::vector<mpq_class>{0, 1, 2}));
}
