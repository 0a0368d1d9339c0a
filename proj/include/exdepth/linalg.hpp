#pragma once

// Exact linear algebra over the rationals for sparse integer matrices.
//
// Rank is computed by fraction-free column reduction: a column whose lowest
// nonzero row is already claimed by a stored pivot column k is replaced by
// a*c - b*k (a, b coprime), which never leaves the integers. Independent
// blocks of the sparsity pattern are reduced separately, first in checked
// 64-bit arithmetic and, on overflow, again with GMP integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <numeric>
#include <utility>
#include <vector>

namespace exdepth::linalg {

template <class T>
using SparseColumn = std::vector<std::pair<std::uint32_t, T>>;

/// Column-major sparse matrix; every column is sorted by row index and holds
/// no explicit zeros.
template <class T>
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseColumn<T>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  /// Adds `value` at (row, col). Entries must be pushed in increasing row
  /// order per column, or finalize() called afterwards.
  void push(std::size_t row, std::size_t col, T value) {
    if (value == 0) return;
    columns[col].emplace_back(static_cast<std::uint32_t>(row), std::move(value));
  }

  /// Sorts columns and merges duplicate positions.
  void finalize() {
    for (auto& col : columns) {
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseColumn<T> merged;
      for (auto& [r, v] : col) {
        if (!merged.empty() && merged.back().first == r)
          merged.back().second += v;
        else
          merged.emplace_back(r, v);
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      col = std::move(merged);
    }
  }

  std::size_t nonzeros() const {
    std::size_t nz = 0;
    for (const auto& c : columns) nz += c.size();
    return nz;
  }
};

using IntMatrix = SparseMatrix<std::int64_t>;
using BigIntMatrix = SparseMatrix<mpz_class>;
using RationalMatrix = SparseMatrix<mpq_class>;

/// 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t to_residue(std::int64_t v, std::uint64_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

inline std::uint64_t to_residue(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

struct Int64Ops {
  using T = std::int64_t;
  static bool mul(T a, T b, T& out) { return !__builtin_mul_overflow(a, b, &out); }
  static bool sub(T a, T b, T& out) { return !__builtin_sub_overflow(a, b, &out); }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static bool abs_ok(T a) { return a != INT64_MIN; }
};

struct BigOps {
  using T = mpz_class;
  static bool mul(const T& a, const T& b, T& out) {
    out = a * b;
    return true;
  }
  static bool sub(const T& a, const T& b, T& out) {
    out = a - b;
    return true;
  }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool abs_ok(const T&) { return true; }
};

/// Divides a column by the gcd of its entries. Returns false on overflow.
template <class Ops>
bool normalize(SparseColumn<typename Ops::T>& c) {
  using T = typename Ops::T;
  if (c.empty()) return true;
  T g = 0;
  for (const auto& e : c) {
    if (!Ops::abs_ok(e.second)) return false;
    g = Ops::gcd(g, e.second);
    if (g == 1) return true;
  }
  if (g > 1)
    for (auto& e : c) e.second /= g;
  return true;
}

/// c <- a*c - b*k. Returns false on overflow.
template <class Ops>
bool combine(SparseColumn<typename Ops::T>& c, const typename Ops::T& a, const typename Ops::T& b,
             const SparseColumn<typename Ops::T>& k) {
  using T = typename Ops::T;
  SparseColumn<T> out;
  out.reserve(c.size() + k.size());
  std::size_t i = 0, j = 0;
  T x, y, z;
  while (i < c.size() || j < k.size()) {
    if (j == k.size() || (i < c.size() && c[i].first < k[j].first)) {
      if (!Ops::mul(a, c[i].second, x)) return false;
      out.emplace_back(c[i].first, x);
      ++i;
    } else if (i == c.size() || k[j].first < c[i].first) {
      if (!Ops::mul(b, k[j].second, y)) return false;
      if (!Ops::sub(T(0), y, z)) return false;
      out.emplace_back(k[j].first, z);
      ++j;
    } else {
      if (!Ops::mul(a, c[i].second, x) || !Ops::mul(b, k[j].second, y) || !Ops::sub(x, y, z)) return false;
      if (z != 0) out.emplace_back(c[i].first, z);
      ++i;
      ++j;
    }
  }
  c = std::move(out);
  return true;
}

/// Rank of the given columns over Q, or -1 on overflow. `pivot` maps a row
/// to the stored column owning it; entries touched here are reset on exit.
template <class Ops>
long reduce_rank(std::vector<SparseColumn<typename Ops::T>> cols, std::vector<int>& pivot) {
  using T = typename Ops::T;
  std::vector<SparseColumn<T>> stored;
  std::vector<std::uint32_t> claimed;
  long rank = 0;
  bool overflow = false;
  for (auto& c : cols) {
    if (!normalize<Ops>(c)) {
      overflow = true;
      break;
    }
    while (!c.empty()) {
      std::uint32_t low = c.back().first;
      int k = pivot[low];
      if (k < 0) {
        pivot[low] = static_cast<int>(stored.size());
        claimed.push_back(low);
        stored.push_back(std::move(c));
        ++rank;
        break;
      }
      const auto& kc = stored[static_cast<std::size_t>(k)];
      T a = kc.back().second, b = c.back().second;
      T g = Ops::gcd(a, b);
      a /= g;
      b /= g;
      if (!combine<Ops>(c, a, b, kc) || !normalize<Ops>(c)) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
  }
  for (auto r : claimed) pivot[r] = -1;
  return overflow ? -1 : rank;
}

/// Groups column indices by connected component of the row/column incidence graph.
template <class T>
std::vector<std::vector<std::size_t>> column_blocks(const SparseMatrix<T>& m) {
  std::vector<std::size_t> parent(m.cols + m.rows);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& e : m.columns[c]) {
      std::size_t a = find(c), b = find(m.cols + e.first);
      if (a != b) parent[a] = b;
    }
  std::vector<long> block_of(m.cols + m.rows, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (m.columns[c].empty()) continue;
    std::size_t r = find(c);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[r])].push_back(c);
  }
  return blocks;
}

}  // namespace detail

/// Exact rank over Q of a sparse integer matrix.
inline std::size_t exact_rank(const BigIntMatrix& m) {
  std::vector<int> pivot(m.rows, -1);
  std::size_t rank = 0;
  for (const auto& block : detail::column_blocks(m)) {
    std::vector<SparseColumn<mpz_class>> cols;
    for (auto c : block) cols.push_back(m.columns[c]);
    rank += static_cast<std::size_t>(detail::reduce_rank<detail::BigOps>(std::move(cols), pivot));
  }
  return rank;
}

/// Exact rank over Q of a sparse integer matrix.
inline std::size_t exact_rank(const IntMatrix& m) {
  std::vector<int> pivot(m.rows, -1);
  std::size_t rank = 0;
  for (const auto& block : detail::column_blocks(m)) {
    std::vector<SparseColumn<std::int64_t>> small;
    for (auto c : block) small.push_back(m.columns[c]);
    long r = detail::reduce_rank<detail::Int64Ops>(small, pivot);
    if (r < 0) {
      std::vector<SparseColumn<mpz_class>> big;
      for (auto& col : small) {
        SparseColumn<mpz_class> b;
        for (auto& [row, v] : col) b.emplace_back(row, mpz_class(static_cast<long>(v)));
        big.push_back(std::move(b));
      }
      r = detail::reduce_rank<detail::BigOps>(std::move(big), pivot);
    }
    rank += static_cast<std::size_t>(r);
  }
  return rank;
}

/// Rank over F_p. Always a lower bound for the rank over Q.
template <class T>
std::size_t rank_mod_p(const SparseMatrix<T>& m, std::uint64_t p = kMersenne61) {
  using Col = SparseColumn<std::uint64_t>;
  std::vector<int> pivot(m.rows, -1);
  std::vector<Col> stored;
  std::size_t rank = 0;
  for (const auto& src : m.columns) {
    Col c;
    for (const auto& [r, v] : src) {
      std::uint64_t x = detail::to_residue(v, p);
      if (x != 0) c.emplace_back(r, x);
    }
    while (!c.empty()) {
      std::uint32_t low = c.back().first;
      int k = pivot[low];
      if (k < 0) {
        // Scale so the pivot entry is 1.
        std::uint64_t inv = detail::powmod(c.back().second, p - 2, p);
        for (auto& e : c) e.second = detail::mulmod(e.second, inv, p);
        pivot[low] = static_cast<int>(stored.size());
        stored.push_back(std::move(c));
        ++rank;
        break;
      }
      const Col& kc = stored[static_cast<std::size_t>(k)];
      std::uint64_t f = c.back().second;
      Col out;
      out.reserve(c.size() + kc.size());
      std::size_t i = 0, j = 0;
      while (i < c.size() || j < kc.size()) {
        if (j == kc.size() || (i < c.size() && c[i].first < kc[j].first)) {
          out.push_back(c[i++]);
        } else {
          std::uint64_t sub = detail::mulmod(f, kc[j].second, p);
          std::uint64_t base = (i < c.size() && c[i].first == kc[j].first) ? c[i++].second : 0;
          std::uint64_t z = base >= sub ? base - sub : base + p - sub;
          if (z != 0) out.emplace_back(kc[j].first, z);
          ++j;
        }
      }
      c = std::move(out);
    }
  }
  return rank;
}

/// Dense rational matrix in row-major order.
using DenseRational = std::vector<std::vector<mpq_class>>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(DenseRational& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

template <class T>
DenseRational to_dense(const SparseMatrix<T>& m) {
  DenseRational a(m.rows, std::vector<mpq_class>(m.cols));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) a[r][c] = mpq_class(v);
  return a;
}

/// Basis of {x : m x = 0}, returned in reduced row echelon form.
template <class T>
DenseRational kernel_basis(const SparseMatrix<T>& m) {
  DenseRational a = to_dense(m);
  std::vector<std::size_t> pivots = a.empty() ? std::vector<std::size_t>{} : rref(a);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  DenseRational basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

}  // namespace exdepth::linalg
