#pragma once

#include "latdeg/determinant.hpp"
#include "latdeg/hermite.hpp"
#include "latdeg/smith.hpp"

#include <optional>
#include <span>

namespace latdeg {

// Subgroup L of Z^s spanned by the rows of a generator matrix whose rows all
// sum to zero. The Smith decomposition of the generators is computed once at
// construction; the object is immutable afterwards.
class HomogeneousLattice {
 public:
  explicit HomogeneousLattice(ZMatrix generators) : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.rows(); ++i) {
      BigInt sum = 0;
      for (const auto& x : generators_.row(i)) sum += x;
      if (sum != 0) throw NotHomogeneous(i);
    }
    decomposition_ = smith_normal_form(generators_);
  }

  std::size_t ambient_dim() const { return generators_.cols(); }
  std::size_t rank() const { return decomposition_.rank; }
  const ZMatrix& generators() const { return generators_; }
  const SmithDecomposition& decomposition() const { return decomposition_; }
  const std::vector<BigInt>& invariant_factors() const { return decomposition_.invariant_factors; }

  // Coordinates of v in the Smith basis: w = v * V.
  ZVector smith_coordinates(std::span<const BigInt> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch(ambient_dim(), v.size());
    return vec_mul(v, decomposition_.v);
  }

 private:
  ZMatrix generators_;
  SmithDecomposition decomposition_;
};

inline HomogeneousLattice lattice_from_generators(ZMatrix generators) {
  return HomogeneousLattice(std::move(generators));
}

// v is in L iff d_i | w_i for i < r and w_i == 0 for i >= r, with w = v * V.
inline bool lattice_contains(const HomogeneousLattice& l, std::span<const BigInt> v) {
  const ZVector w = l.smith_coordinates(v);
  const auto& d = l.invariant_factors();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < d.size()) {
      if (w[i] % d[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

// Order of v + L in Z^s / L: a positive integer, or infinite (nullopt).
class ElementOrder {
 public:
  static ElementOrder finite(BigInt n) { return ElementOrder(std::move(n)); }
  static ElementOrder infinite() { return ElementOrder(); }

  bool is_finite() const { return value_.has_value(); }
  const BigInt& value() const { return value_.value(); }

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  ElementOrder() = default;
  explicit ElementOrder(BigInt n) : value_(std::move(n)) {}
  std::optional<BigInt> value_;
};

inline ElementOrder element_order(const HomogeneousLattice& l, std::span<const BigInt> v) {
  const ZVector w = l.smith_coordinates(v);
  const auto& d = l.invariant_factors();
  BigInt order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < d.size()) {
      order = lcm(order, d[i] / gcd(d[i], w[i]));
    } else if (w[i] != 0) {
      return ElementOrder::infinite();
    }
  }
  return ElementOrder::finite(std::move(order));
}

struct TorsionStructure {
  std::vector<BigInt> cyclic_factors;  // invariant factors > 1
  BigInt order = 1;
  std::size_t free_rank = 0;
};

inline TorsionStructure torsion_structure(const HomogeneousLattice& l) {
  TorsionStructure t;
  for (const auto& d : l.invariant_factors())
    if (d > 1) t.cyclic_factors.push_back(d);
  t.order = product(l.invariant_factors());
  t.free_rank = l.ambient_dim() - l.rank();
  return t;
}

inline bool is_torsion_free(const HomogeneousLattice& l) {
  for (const auto& d : l.invariant_factors())
    if (d != 1) return false;
  return true;
}

namespace detail {
inline void require_full_rank(const HomogeneousLattice& l) {
  const std::size_t s = l.ambient_dim();
  const std::size_t expected = s == 0 ? 0 : s - 1;
  if (l.rank() != expected) throw RankMismatch(expected, l.rank());
}

inline ZVector unit_difference(std::size_t s, std::size_t i) {
  ZVector v(s);
  v[i] = 1;
  v[s - 1] = -1;
  return v;
}
}  // namespace detail

// Degree of S/I(L) for a graded lattice ideal of dimension one: the order of
// the torsion subgroup, d_1 * ... * d_{s-1}. Refuses other ranks, where the
// torsion order and the degree can differ.
inline BigInt degree(const HomogeneousLattice& l) {
  detail::require_full_rank(l);
  return product(l.invariant_factors());
}

// n_i = order of e_i - e_s; the Hilbert function of S/I(L) is constant from
// degree sum(n_i - 1) + 1 on.
inline std::vector<BigInt> unit_difference_orders(const HomogeneousLattice& l) {
  detail::require_full_rank(l);
  const std::size_t s = l.ambient_dim();
  std::vector<BigInt> orders;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    ElementOrder o = element_order(l, detail::unit_difference(s, i));
    // Rank s-1 forces every e_i - e_s to be torsion.
    assert(o.is_finite());
    orders.push_back(o.value());
  }
  return orders;
}

inline BigInt regularity_upper_bound(const HomogeneousLattice& l) {
  BigInt bound = 1;
  for (const auto& n : unit_difference_orders(l)) bound += n - 1;
  return bound;
}

// |det| of a Z-basis written in the basis e_1 - e_s, ..., e_{s-1} - e_s.
// Since every basis row sums to zero, those coordinates are just the first
// s-1 entries.
inline BigInt normalized_volume_of_basis(const ZMatrix& basis) {
  if (basis.cols() == 0) return 1;
  if (basis.rows() + 1 != basis.cols()) throw RankMismatch(basis.cols() - 1, basis.rows());
  return abs(determinant(basis.drop_last_column()));
}

inline BigInt normalized_volume(const HomogeneousLattice& l) {
  detail::require_full_rank(l);
  return normalized_volume_of_basis(hermite_normal_form(l.generators()).basis());
}

}  // namespace latdeg
