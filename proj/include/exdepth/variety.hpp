#pragma once

// Finite unions of coordinate subspaces of E_1.
//
// A component is stored by its zero-set Z, standing for
// V(x_i : i in Z) = span{e_j : j not in Z}. Larger Z means a smaller
// subspace, so the canonical form keeps only the minimal zero-sets.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "exdepth/graph.hpp"

namespace exdepth {

class CoordinateSubspaceUnion {
 public:
  /// The empty variety in ambient dimension n.
  explicit CoordinateSubspaceUnion(int ambient_n = 0) : n_(ambient_n) {
    if (n_ < 0 || n_ > kMaxMaskVertices) throw CapExceeded("varieties support ambient dimension at most 64");
  }

  CoordinateSubspaceUnion(int ambient_n, std::vector<VertexSet> zero_sets) : CoordinateSubspaceUnion(ambient_n) {
    for (VertexSet z : zero_sets)
      if ((z & ~bits::full(n_)) != 0) throw DomainError("zero-set index outside the ambient space");
    components_ = std::move(zero_sets);
    canonicalize();
  }

  /// All of E_1.
  static CoordinateSubspaceUnion whole(int n) { return CoordinateSubspaceUnion(n, {VertexSet{0}}); }
  /// V(x_i : i in z).
  static CoordinateSubspaceUnion single(int n, VertexSet z) { return CoordinateSubspaceUnion(n, {z}); }

  /// The union of span{e_i : i in sigma} over sigma in `sigmas`.
  static CoordinateSubspaceUnion from_sigma(int n, const std::vector<VertexSet>& sigmas) {
    std::vector<VertexSet> zs;
    zs.reserve(sigmas.size());
    for (VertexSet s : sigmas) zs.push_back(bits::full(n) & ~s);
    return CoordinateSubspaceUnion(n, std::move(zs));
  }

  int ambient() const noexcept { return n_; }
  const std::vector<VertexSet>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }

  /// Maximal coordinate spans, as vertex sets.
  std::vector<VertexSet> maximal_sigmas() const {
    std::vector<VertexSet> out;
    for (VertexSet z : components_) out.push_back(bits::full(n_) & ~z);
    return out;
  }

  /// Smallest zero-set size; nullopt for the empty variety.
  std::optional<int> codim() const {
    if (components_.empty()) return std::nullopt;
    int best = n_;
    for (VertexSet z : components_) best = std::min(best, bits::count(z));
    return best;
  }

  /// Whether span{e_i : i in sigma} lies inside the variety.
  bool contains_span(VertexSet sigma) const {
    return std::any_of(components_.begin(), components_.end(), [&](VertexSet z) { return (z & sigma) == 0; });
  }

  friend CoordinateSubspaceUnion unite(const CoordinateSubspaceUnion& a, const CoordinateSubspaceUnion& b) {
    check_same(a, b);
    std::vector<VertexSet> zs = a.components_;
    zs.insert(zs.end(), b.components_.begin(), b.components_.end());
    return CoordinateSubspaceUnion(a.n_, std::move(zs));
  }

  friend CoordinateSubspaceUnion intersect(const CoordinateSubspaceUnion& a, const CoordinateSubspaceUnion& b) {
    check_same(a, b);
    std::vector<VertexSet> zs;
    zs.reserve(a.components_.size() * b.components_.size());
    for (VertexSet x : a.components_)
      for (VertexSet y : b.components_) zs.push_back(x | y);
    return CoordinateSubspaceUnion(a.n_, std::move(zs));
  }

  /// Adds coordinate n+1. With the hyperplane, x_{n+1} joins every zero-set.
  CoordinateSubspaceUnion embed_add_vertex(bool with_hyperplane) const {
    CoordinateSubspaceUnion out(n_ + 1);
    out.components_ = components_;
    if (with_hyperplane)
      for (auto& z : out.components_) z |= bits::bit(n_);
    out.canonicalize();
    return out;
  }

  /// Re-expresses the variety in a larger ambient space: coordinate i goes to
  /// map[i], and `extra_zeros` are added to every zero-set.
  CoordinateSubspaceUnion lift(int ambient_n, const std::vector<int>& map, VertexSet extra_zeros = 0) const {
    std::vector<VertexSet> zs;
    for (VertexSet z : components_) {
      VertexSet w = extra_zeros;
      bits::for_each(z, [&](int i) { w |= bits::bit(map[static_cast<std::size_t>(i)]); });
      zs.push_back(w);
    }
    return CoordinateSubspaceUnion(ambient_n, std::move(zs));
  }

  /// "V(x_1,x_4) ∪ V(x_2)"; "E_1" for the whole space, "∅" when empty.
  std::string render() const {
    if (components_.empty()) return "∅";
    std::string out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (c) out += " ∪ ";
      if (components_[c] == 0) {
        out += "E_1";
        continue;
      }
      out += "V(";
      bool first = true;
      bits::for_each(components_[c], [&](int i) {
        if (!first) out += ',';
        first = false;
        out += "x_" + std::to_string(i + 1);
      });
      out += ')';
    }
    return out;
  }

  /// Same as render() but names variables by vertex label, e.g. x_{1,1}.
  std::string render(const Graph& g) const {
    if (!g.has_labels()) return render();
    if (components_.empty()) return "∅";
    std::string out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (c) out += " ∪ ";
      if (components_[c] == 0) {
        out += "E_1";
        continue;
      }
      out += "V(";
      bool first = true;
      bits::for_each(components_[c], [&](int i) {
        if (!first) out += ',';
        first = false;
        out += "x_{" + g.label(i) + "}";
      });
      out += ')';
    }
    return out;
  }

  /// Zero-sets as sorted 1-based index lists.
  std::vector<std::vector<int>> to_lists() const {
    std::vector<std::vector<int>> out;
    for (VertexSet z : components_) {
      std::vector<int> l;
      bits::for_each(z, [&](int i) { l.push_back(i + 1); });
      out.push_back(std::move(l));
    }
    return out;
  }

  static CoordinateSubspaceUnion from_lists(int n, const std::vector<std::vector<int>>& lists) {
    std::vector<VertexSet> zs;
    for (const auto& l : lists) {
      VertexSet z = 0;
      for (int i : l) {
        if (i < 1 || i > n) throw DomainError("variety index out of range");
        z |= bits::bit(i - 1);
      }
      zs.push_back(z);
    }
    return CoordinateSubspaceUnion(n, std::move(zs));
  }

  friend bool operator==(const CoordinateSubspaceUnion&, const CoordinateSubspaceUnion&) = default;

 private:
  static void check_same(const CoordinateSubspaceUnion& a, const CoordinateSubspaceUnion& b) {
    if (a.n_ != b.n_) throw DomainError("ambient dimensions differ");
  }

  void canonicalize() {
    std::sort(components_.begin(), components_.end(), bits::graded_less);
    components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
    std::vector<VertexSet> kept;
    for (VertexSet z : components_) {
      // Sorted by size, so any subset of z is already in `kept`.
      bool absorbed = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return (k & ~z) == 0; });
      if (!absorbed) kept.push_back(z);
    }
    components_ = std::move(kept);
  }

  int n_ = 0;
  std::vector<VertexSet> components_;
};

}  // namespace exdepth
