#pragma once

// E/I_E(G) on its monomial basis of independent sets, multiplication by
// linear forms, regularity, colon spaces and a Monte Carlo rank-variety
// oracle.
//
// Sign convention: e_i ∧ e_T = (-1)^{#{t in T : t < i}} e_{T ∪ {i}}.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "exdepth/graph.hpp"
#include "exdepth/linalg.hpp"
#include "exdepth/variety.hpp"

namespace exdepth {

/// Exact rational coefficients of e_1..e_n.
struct LinearForm {
  std::vector<mpq_class> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<mpq_class> c) : coeffs(std::move(c)) {}
  LinearForm(std::initializer_list<long> c) {
    for (long x : c) coeffs.emplace_back(x);
  }
  /// The form sum_{i in s} e_i in ambient n.
  static LinearForm indicator(int n, VertexSet s) {
    LinearForm f;
    f.coeffs.assign(static_cast<std::size_t>(n), 0);
    bits::for_each(s, [&](int i) { f.coeffs[static_cast<std::size_t>(i)] = 1; });
    return f;
  }

  int size() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
  }
  /// Integer multiple with the same kernel and image (denominators cleared).
  std::vector<mpz_class> cleared() const {
    mpz_class l = 1;
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
  }
};

/// Koszul sign of e_i ∧ e_T.
inline int wedge_sign(int i, VertexSet t) { return (bits::count(t & (bits::bit(i) - 1)) & 1) ? -1 : 1; }

/// Independent sets of G in graded order, with a reverse index.
class QuotientBasis {
 public:
  static constexpr std::size_t kDefaultMaxSize = std::size_t{1} << 22;

  explicit QuotientBasis(const Graph& g, std::size_t max_size = kDefaultMaxSize) : n_(g.order()) {
    if (!g.has_masks()) throw CapExceeded("quotient basis needs at most 64 vertices");
    std::vector<VertexSet> nbr(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    // Each set is extended only by vertices above its maximum.
    sets_.push_back(0);
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      VertexSet s = sets_[k];
      int start = s == 0 ? 0 : 64 - std::countl_zero(s);
      for (int v = start; v < n_; ++v) {
        if ((nbr[static_cast<std::size_t>(v)] & s) != 0) continue;
        sets_.push_back(s | bits::bit(v));
        if (sets_.size() > max_size)
          throw CapExceeded("more than " + std::to_string(max_size) + " independent sets");
      }
    }
    std::sort(sets_.begin(), sets_.end(), bits::graded_less);
    index_.reserve(sets_.size() * 2);
    for (std::size_t k = 0; k < sets_.size(); ++k) index_.emplace(sets_[k], static_cast<std::uint32_t>(k));
  }

  int ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return sets_.size(); }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  std::optional<std::size_t> index(VertexSet s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int n_;
  std::vector<VertexSet> sets_;
  std::unordered_map<VertexSet, std::uint32_t> index_;
};

namespace detail {

/// Matrix of m -> (sum_i c_i e_i) ∧ m. `coeff(i)` gives c_i; zero terms skipped.
template <class T, class Coeff>
linalg::SparseMatrix<T> multiplication_matrix_impl(const QuotientBasis& basis, VertexSet support, Coeff&& coeff) {
  const auto& sets = basis.sets();
  linalg::SparseMatrix<T> m(sets.size(), sets.size());
  for (std::size_t c = 0; c < sets.size(); ++c) {
    VertexSet t = sets[c];
    bits::for_each(support & ~t, [&](int i) {
      if (auto r = basis.index(t | bits::bit(i))) {
        T v = coeff(i);
        if (wedge_sign(i, t) < 0) v = -v;
        m.push(*r, c, std::move(v));
      }
    });
    auto& col = m.columns[c];
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

inline VertexSet support_of(const std::vector<mpz_class>& c) {
  VertexSet s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s |= bits::bit(static_cast<int>(i));
  return s;
}

inline void check_form(const QuotientBasis& basis, const LinearForm& l) {
  if (l.size() != basis.ambient())
    throw DomainError("linear form has " + std::to_string(l.size()) + " coefficients, expected " +
                      std::to_string(basis.ambient()));
}

/// Whether rank equals dim/2, using a mod-p certificate before exact rank.
template <class T>
bool half_rank(const linalg::SparseMatrix<T>& m, std::size_t dim) {
  if (dim % 2 != 0) return false;
  if (linalg::rank_mod_p(m) == dim / 2) return true;
  return linalg::exact_rank(m) == dim / 2;
}

}  // namespace detail

/// Exact matrix of m -> ℓ ∧ m on the quotient basis (columns are sources).
inline linalg::RationalMatrix multiplication_matrix(const QuotientBasis& basis, const LinearForm& l) {
  detail::check_form(basis, l);
  VertexSet support = 0;
  for (int i = 0; i < l.size(); ++i)
    if (l.coeffs[static_cast<std::size_t>(i)] != 0) support |= bits::bit(i);
  return detail::multiplication_matrix_impl<mpq_class>(basis, support,
                                                      [&](int i) { return l.coeffs[static_cast<std::size_t>(i)]; });
}

inline linalg::RationalMatrix multiplication_matrix(const Graph& g, const LinearForm& l) {
  return multiplication_matrix(QuotientBasis(g), l);
}

/// Integer matrix of a form with integer coefficients (denominators cleared).
inline linalg::BigIntMatrix integer_multiplication_matrix(const QuotientBasis& basis, const LinearForm& l) {
  detail::check_form(basis, l);
  auto c = l.cleared();
  return detail::multiplication_matrix_impl<mpz_class>(basis, detail::support_of(c),
                                                      [&](int i) { return c[static_cast<std::size_t>(i)]; });
}

inline std::size_t multiplication_rank(const QuotientBasis& basis, const LinearForm& l) {
  return linalg::exact_rank(integer_multiplication_matrix(basis, l));
}

inline bool is_regular(const QuotientBasis& basis, const LinearForm& l) {
  detail::check_form(basis, l);
  if (l.is_zero()) throw DomainError("the zero form is not a valid regularity test");
  return detail::half_rank(integer_multiplication_matrix(basis, l), basis.dim());
}

inline bool is_regular(const Graph& g, const LinearForm& l) { return is_regular(QuotientBasis(g), l); }

struct ColonSpaceResult {
  /// Kernel of multiplication by e_i - e_j, rows in reduced echelon form.
  std::optional<linalg::DenseRational> kernel;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  /// Dimension of the predicted annihilator (ℓ) + J modulo I.
  std::size_t predicted_dim = 0;
  /// Predicted space equals the annihilator.
  bool equal = false;
  /// e_i - e_j is regular, i.e. the annihilator is just ℓ·(E/I).
  bool regular = false;
};

/// Annihilator of e_i - e_j on E/I_E(G), compared with the prediction
/// ℓ·E + J where J = (e_k : k in N[i] ∩ N[j]) + (e_a e_b : a in N(i), b in N(j)).
inline ColonSpaceResult colon_space(const Graph& g, int i, int j, bool with_basis = true) {
  if (i == j) throw DomainError("colon space needs two distinct vertices");
  if (i < 0 || j < 0 || i >= g.order() || j >= g.order()) throw DomainError("vertex out of range");
  QuotientBasis basis(g);
  const std::size_t dim = basis.dim();
  LinearForm l;
  l.coeffs.assign(static_cast<std::size_t>(g.order()), 0);
  l.coeffs[static_cast<std::size_t>(i)] = 1;
  l.coeffs[static_cast<std::size_t>(j)] = -1;
  auto mult = [&](int a) {
    return detail::multiplication_matrix_impl<std::int64_t>(basis, bits::bit(a), [](int) { return std::int64_t{1}; });
  };
  linalg::IntMatrix m = detail::multiplication_matrix_impl<std::int64_t>(
      basis, bits::bit(i) | bits::bit(j), [&](int a) { return a == i ? std::int64_t{1} : std::int64_t{-1}; });

  ColonSpaceResult out;
  out.image_dim = linalg::exact_rank(m);
  out.kernel_dim = dim - out.image_dim;
  out.regular = out.kernel_dim == out.image_dim;

  // Generators of the predicted space, as vectors in the quotient.
  std::vector<linalg::SparseColumn<std::int64_t>> gens;
  for (const auto& col : m.columns)
    if (!col.empty()) gens.push_back(col);
  VertexSet common = g.closed_neighbor_mask(i) & g.closed_neighbor_mask(j);
  bits::for_each(common, [&](int k) {
    for (auto& col : mult(k).columns)
      if (!col.empty()) gens.push_back(std::move(col));
  });
  for (int a : g.neighbors(i))
    for (int b : g.neighbors(j)) {
      if (a == b) continue;
      // e_a e_b m = e_a ∧ (e_b ∧ m); signs do not change the span.
      const auto& sets = basis.sets();
      for (std::size_t c = 0; c < sets.size(); ++c) {
        VertexSet t = sets[c];
        if ((t & (bits::bit(a) | bits::bit(b))) != 0) continue;
        VertexSet u = t | bits::bit(a) | bits::bit(b);
        if (auto r = basis.index(u)) {
          std::int64_t s = wedge_sign(b, t) * wedge_sign(a, t | bits::bit(b));
          gens.push_back({{static_cast<std::uint32_t>(*r), s}});
        }
      }
    }

  linalg::IntMatrix p(dim, gens.size());
  p.columns = gens;
  out.predicted_dim = linalg::exact_rank(p);

  // The prediction lies in the annihilator iff m * p = 0 for every generator.
  bool contained = true;
  std::vector<std::int64_t> acc(dim, 0);
  for (const auto& gen : gens) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [r, v] : gen)
      for (const auto& [r2, w] : m.columns[r]) acc[r2] += v * w;
    if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; })) {
      contained = false;
      break;
    }
  }
  out.equal = contained && out.predicted_dim == out.kernel_dim;
  if (with_basis) out.kernel = linalg::kernel_basis(m);
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the stream for one (seed, sigma, trial) triple.
inline std::uint64_t trial_seed(std::uint64_t seed, VertexSet sigma, int trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ sigma) + static_cast<std::uint64_t>(trial));
}

}  // namespace detail

inline constexpr std::int64_t kCoefficientBound = 1'000'000;

/// Monte Carlo test of span{e_i : i in sigma} ⊆ V_E(G): every trial draws ℓ
/// with uniform integer coefficients in [-10^6, 10^6] on sigma and the
/// answer is "singular" only if all trials are.
inline bool subspace_is_singular(const QuotientBasis& basis, VertexSet sigma, int trials, std::uint64_t seed) {
  if (sigma == 0) throw DomainError("sigma must be nonempty");
  if (trials < 1) throw DomainError("trials must be positive");
  if ((sigma & ~bits::full(basis.ambient())) != 0) throw DomainError("sigma outside the vertex set");
  if (basis.dim() % 2 != 0) return true;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::trial_seed(seed, sigma, t));
    std::uniform_int_distribution<std::int64_t> dist(-kCoefficientBound, kCoefficientBound);
    std::vector<std::int64_t> c(static_cast<std::size_t>(basis.ambient()), 0);
    bool nonzero = false;
    while (!nonzero) {
      bits::for_each(sigma, [&](int i) {
        c[static_cast<std::size_t>(i)] = dist(rng);
        nonzero = nonzero || c[static_cast<std::size_t>(i)] != 0;
      });
    }
    auto m = detail::multiplication_matrix_impl<std::int64_t>(basis, sigma,
                                                             [&](int i) { return c[static_cast<std::size_t>(i)]; });
    if (!detail::half_rank(m, basis.dim())) continue;
    return false;
  }
  return true;
}

inline bool subspace_is_singular(const Graph& g, VertexSet sigma, int trials, std::uint64_t seed) {
  return subspace_is_singular(QuotientBasis(g), sigma, trials, seed);
}

struct RankVarietyResult {
  int depth = 0;
  /// Maximal singular coordinate spans found, as vertex sets.
  std::vector<VertexSet> maximal_singular;
  /// Present when the whole subset lattice was resolved.
  std::optional<CoordinateSubspaceUnion> variety;
};

struct RankVarietyOptions {
  int trials = 3;
  std::uint64_t seed = 0;
  int cap = 14;
  /// Resolve every size class instead of stopping at the first singular one.
  bool full_variety = true;
};

/// depth_E(G) = n - max{|sigma| : span sigma singular}, searched from the
/// largest sigma down. Subsets of a known singular sigma are singular and
/// are not retested.
inline RankVarietyResult depth_via_rank_variety(const Graph& g, const RankVarietyOptions& opt = {}) {
  const int n = g.order();
  if (n > opt.cap)
    throw CapExceeded("rank-variety oracle cap is " + std::to_string(opt.cap) + " vertices; graph has " +
                      std::to_string(n));
  QuotientBasis basis(g);
  RankVarietyResult out;
  out.depth = n;
  bool found = false;
  for (int k = n; k >= 1; --k) {
    bool found_here = false;
    bits::for_each_subset_of_size(bits::full(n), k, [&](VertexSet s) {
      for (VertexSet m : out.maximal_singular)
        if ((s & ~m) == 0) return;
      if (subspace_is_singular(basis, s, opt.trials, opt.seed)) {
        out.maximal_singular.push_back(s);
        found_here = true;
      }
    });
    if (found_here && !found) {
      out.depth = n - k;
      found = true;
    }
    if (found && !opt.full_variety) break;
  }
  if (opt.full_variety) {
    // No nonempty singular span leaves only the origin.
    std::vector<VertexSet> sigmas = out.maximal_singular;
    if (sigmas.empty()) sigmas.push_back(0);
    out.variety = CoordinateSubspaceUnion::from_sigma(n, sigmas);
  }
  std::sort(out.maximal_singular.begin(), out.maximal_singular.end(), bits::graded_less);
  return out;
}

}  // namespace exdepth
