#pragma once

#include "latdeg/lattice.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <sstream>

namespace latdeg {

// Projective toric set over F_q (q prime) parameterized by x^{v_1}, ..., x^{v_s}
// with x ranging over (F_q^*)^n.
struct ToricSetSpec {
  std::uint64_t q = 2;
  std::size_t n = 1;
  std::vector<std::vector<std::uint64_t>> exponents;  // s rows of length n

  std::size_t s() const { return exponents.size(); }
};

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

inline void validate(const ToricSetSpec& spec) {
  if (!is_prime(spec.q)) throw NonPrimeField(spec.q);
  if (spec.q > (1ULL << 31)) throw InvalidInput("field size q must be below 2^31");
  if (spec.n == 0) throw InvalidInput("parameter count n must be >= 1");
  if (spec.exponents.empty()) throw InvalidInput("at least one exponent vector is required");
  for (const auto& v : spec.exponents)
    if (v.size() != spec.n) throw DimensionMismatch(spec.n, v.size());
}

// Point of P^{s-1} with nonzero coordinates, scaled so the first is 1.
struct ProjectivePoint {
  std::vector<std::uint64_t> coords;
  auto operator<=>(const ProjectivePoint&) const = default;
};

namespace detail {
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a * b % q; }

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  base %= q;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, q);
    base = mul_mod(base, base, q);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }
}  // namespace detail

// L = {c in Z^s : sum c_i == 0 and sum c_i v_i == 0 mod (q-1)}, obtained by
// projecting the integer kernel of
//   [ 1 | v_1 ]
//   [ . | ... ]
//   [ 1 | v_s ]
//   [ 0 | (q-1) I_n ]
// onto its first s coordinates.
inline HomogeneousLattice build_toric_lattice(const ToricSetSpec& spec) {
  validate(spec);
  const std::size_t s = spec.s();
  const std::size_t n = spec.n;
  ZMatrix system(s + n, n + 1);
  for (std::size_t i = 0; i < s; ++i) {
    system(i, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) system(i, j + 1) = spec.exponents[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) system(s + j, j + 1) = spec.q - 1;

  const ZMatrix kernel = integer_kernel(system);
  ZMatrix generators(kernel.rows(), s);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < s; ++j) generators(i, j) = kernel(i, j);
  return HomogeneousLattice(std::move(generators));
}

inline std::set<ProjectivePoint> enumerate_toric_set(const ToricSetSpec& spec,
                                                     std::uint64_t budget = 1'000'000) {
  validate(spec);
  const std::uint64_t q = spec.q;
  const BigInt grid = boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(spec.n));
  if (grid > budget) throw BudgetExceeded(to_string(grid), std::to_string(budget));

  std::set<ProjectivePoint> points;
  std::vector<std::uint64_t> x(spec.n, 1);
  std::vector<std::uint64_t> coords(spec.s());
  for (;;) {
    for (std::size_t i = 0; i < spec.s(); ++i) {
      std::uint64_t c = 1;
      for (std::size_t j = 0; j < spec.n; ++j)
        c = detail::mul_mod(c, detail::pow_mod(x[j], spec.exponents[i][j], q), q);
      coords[i] = c;
    }
    const std::uint64_t scale = detail::inverse_mod(coords[0], q);
    ProjectivePoint p{coords};
    for (auto& c : p.coords) c = detail::mul_mod(c, scale, q);
    points.insert(std::move(p));

    // Next parameter tuple in (F_q^*)^n.
    std::size_t j = 0;
    while (j < spec.n && x[j] == q - 1) x[j++] = 1;
    if (j == spec.n) break;
    ++x[j];
  }
  return points;
}

struct VanishingDegreeReport {
  BigInt lattice_degree;
  std::uint64_t point_count = 0;
  bool agree = false;
};

inline VanishingDegreeReport check_vanishing_degree(const ToricSetSpec& spec,
                                                    std::uint64_t budget = 1'000'000) {
  VanishingDegreeReport r;
  r.lattice_degree = degree(build_toric_lattice(spec));
  r.point_count = enumerate_toric_set(spec, budget).size();
  r.agree = r.lattice_degree == r.point_count;
  return r;
}

struct CompleteIntersectionReport {
  bool q_minus_1_prime = false;
  bool exponents_distinct_mod = false;
  bool torsion_is_power = false;
  bool corollary_applies = false;
  std::vector<BigInt> cyclic_factors;
  std::optional<std::string> predicted_generators;
};

// Checks whether the complete-intersection criterion for I(X) applies: q-1
// prime, the v_i pairwise distinct mod q-1, torsion (Z_{q-1})^{s-1}. When it
// does, the only complete-intersection candidate is
// (t_1^{q-1} - t_s^{q-1}, ..., t_{s-1}^{q-1} - t_s^{q-1}).
inline CompleteIntersectionReport ci_hypothesis_check(const ToricSetSpec& spec) {
  validate(spec);
  const std::uint64_t m = spec.q - 1;
  const std::size_t s = spec.s();
  CompleteIntersectionReport r;
  r.q_minus_1_prime = is_prime(m);

  std::set<std::vector<std::uint64_t>> residues;
  for (const auto& v : spec.exponents) {
    std::vector<std::uint64_t> reduced(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) reduced[j] = v[j] % m;
    residues.insert(std::move(reduced));
  }
  r.exponents_distinct_mod = residues.size() == s;

  r.cyclic_factors = torsion_structure(build_toric_lattice(spec)).cyclic_factors;
  r.torsion_is_power = r.cyclic_factors == std::vector<BigInt>(s - 1, BigInt(m));

  r.corollary_applies = r.q_minus_1_prime && r.exponents_distinct_mod && r.torsion_is_power;
  if (r.corollary_applies) {
    std::ostringstream os;
    for (std::size_t i = 0; i + 1 < s; ++i) {
      if (i > 0) os << ", ";
      os << "t" << i + 1 << "^" << m << "-t" << s << "^" << m;
    }
    r.predicted_generators = os.str();
  }
  return r;
}

}  // namespace latdeg
