#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance suites. The oracles never call the Smith-form or Hermite-form
// code they are used to check.

#include "latdeg/latdeg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace latdeg::testing {

using Rng = std::mt19937_64;

inline BigInt uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ZMatrix random_matrix(Rng& rng, std::size_t m, std::size_t n, int bound) {
  ZMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform(rng, -bound, bound);
  return a;
}

// Row with entries in [-bound, bound] summing to zero (rejection sampled).
inline ZVector random_homogeneous_row(Rng& rng, std::size_t s, int bound) {
  for (;;) {
    ZVector row(s);
    BigInt sum = 0;
    for (std::size_t j = 0; j + 1 < s; ++j) {
      row[j] = uniform(rng, -bound, bound);
      sum += row[j];
    }
    if (s == 0) return row;
    row[s - 1] = -sum;
    if (abs(row[s - 1]) <= bound) return row;
  }
}

inline ZMatrix random_homogeneous_generators(Rng& rng, std::size_t m, std::size_t s, int bound) {
  std::vector<ZVector> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(random_homogeneous_row(rng, s, bound));
  return ZMatrix::from_rows(rows, s);
}

// Homogeneous lattice of rank s-1 with s-1 or s generators in [-bound, bound].
inline HomogeneousLattice random_full_rank_lattice(Rng& rng, std::size_t s, int bound) {
  for (;;) {
    const std::size_t m = (s - 1) + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    HomogeneousLattice l(random_homogeneous_generators(rng, m, s, bound));
    if (l.rank() + 1 == s) return l;
  }
}

// Unimodular matrix as a product of random elementary operations.
inline ZMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  ZMatrix u = ZMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u.negate_row(0);
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < steps; ++k) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    switch (rng() % 3) {
      case 0: u.add_row_multiple(i, j, uniform(rng, -3, 3)); break;
      case 1: u.swap_rows(i, j); break;
      default: u.negate_row(i); break;
    }
  }
  return u;
}

// Leibniz expansion over all permutations; n <= 7.
inline BigInt leibniz_determinant(const ZMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Does sum c_i * row_i == v for some c with |c_i| <= bound? Exhaustive.
inline bool brute_force_contains(const ZMatrix& gens, const ZVector& v, int bound) {
  const std::size_t m = gens.rows();
  const std::size_t s = gens.cols();
  std::vector<int> c(m, -bound);
  if (m == 0) return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  for (;;) {
    bool hit = true;
    for (std::size_t j = 0; j < s && hit; ++j) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < m; ++i) acc += c[i] * gens(i, j);
      hit = acc == v[j];
    }
    if (hit) return true;
    std::size_t k = 0;
    while (k < m && c[k] == bound) c[k++] = -bound;
    if (k == m) return false;
    ++c[k];
  }
}

// All exponent vectors in N^s of total degree d, lexicographic.
inline std::vector<ZVector> exponent_vectors(std::size_t s, int d) {
  std::vector<ZVector> out;
  ZVector cur(s);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == s) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (s == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  return out;
}

// Number of classes among degree-d exponent vectors under a ~ b iff
// member(a - b), merged pairwise with union-find.
inline std::uint64_t pairwise_coset_count(std::size_t s, int d, const std::function<bool(const ZVector&)>& member) {
  const auto vs = exponent_vectors(s, d);
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::uint64_t classes = vs.size();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (find(i) == find(j)) continue;
      ZVector diff(s);
      for (std::size_t k = 0; k < s; ++k) diff[k] = vs[i][k] - vs[j][k];
      if (member(diff)) {
        parent[find(i)] = find(j);
        --classes;
      }
    }
  return classes;
}

inline GraphSpec complete_graph(std::size_t n) {
  GraphSpec g{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

inline GraphSpec cycle_graph(std::size_t n) {
  GraphSpec g{n, {}};
  for (std::size_t i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

inline GraphSpec path_graph(std::size_t n) {
  GraphSpec g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

// Random connected simple graph: a random spanning tree plus extra edges.
inline GraphSpec random_connected_graph(Rng& rng, std::size_t n, double extra_edge_p) {
  GraphSpec g{n, {}};
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    g.edges.emplace_back(u, v);
    used.insert({u, v});
  }
  std::bernoulli_distribution coin(extra_edge_p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used.count({i, j}) && coin(rng)) g.edges.emplace_back(i, j);
  return g;
}

inline ToricSetSpec random_toric_spec(Rng& rng, std::uint64_t q, std::size_t max_s, std::size_t max_n, int max_exp) {
  ToricSetSpec spec;
  spec.q = q;
  spec.n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t s = std::uniform_int_distribution<std::size_t>(1, max_s)(rng);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::uint64_t> v(spec.n);
    for (auto& x : v) x = std::uniform_int_distribution<int>(0, max_exp)(rng);
    spec.exponents.push_back(std::move(v));
  }
  return spec;
}

}  // namespace latdeg::testing
