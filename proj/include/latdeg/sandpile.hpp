#pragma once

#include "latdeg/lattice.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <utility>

namespace latdeg {

// Simple undirected graph on vertices 0..vertex_count-1.
struct GraphSpec {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

namespace detail {
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};
}  // namespace detail

// Rejects loops, repeated edges, out-of-range endpoints, and disconnected
// graphs.
inline void validate(const GraphSpec& g) {
  if (g.vertex_count == 0) throw InvalidInput("graph needs at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  detail::DisjointSets components(g.vertex_count);
  std::size_t merges = 0;
  for (auto [i, j] : g.edges) {
    if (i >= g.vertex_count || j >= g.vertex_count)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(std::max(i, j) + 1));
    if (i == j) throw InvalidInput("loop at vertex " + std::to_string(i + 1));
    if (!seen.insert(std::minmax(i, j)).second)
      throw InvalidInput("repeated edge " + std::to_string(i + 1) + " " + std::to_string(j + 1));
    if (components.unite(i, j)) ++merges;
  }
  if (merges + 1 != g.vertex_count) throw Disconnected();
}

// Degree matrix minus adjacency matrix.
inline ZMatrix laplacian(const GraphSpec& g) {
  ZMatrix lap(g.vertex_count, g.vertex_count);
  for (auto [i, j] : g.edges) {
    lap(i, j) -= 1;
    lap(j, i) -= 1;
    lap(i, i) += 1;
    lap(j, j) += 1;
  }
  return lap;
}

// Row lattice of the full Laplacian; its torsion is the sandpile group.
inline HomogeneousLattice build_laplacian_lattice(const GraphSpec& g) {
  validate(g);
  return HomogeneousLattice(laplacian(g));
}

// Laplacian with the last row and column removed.
inline BigInt reduced_laplacian_determinant(const GraphSpec& g) {
  validate(g);
  const ZMatrix lap = laplacian(g);
  const std::size_t k = g.vertex_count - 1;
  ZMatrix reduced(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) reduced(i, j) = lap(i, j);
  return abs(determinant(reduced));
}

inline constexpr std::size_t kMaxSpanningTreeEdges = 24;

// Exhaustive count: every (s-1)-edge subset that is acyclic is a spanning tree.
inline std::uint64_t spanning_tree_count(const GraphSpec& g) {
  validate(g);
  if (g.edges.size() > kMaxSpanningTreeEdges)
    throw BudgetExceeded(std::to_string(g.edges.size()) + " edges",
                         std::to_string(kMaxSpanningTreeEdges) + " edges");
  const std::size_t need = g.vertex_count - 1;
  const std::size_t e = g.edges.size();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
    detail::DisjointSets forest(g.vertex_count);
    bool acyclic = true;
    for (std::size_t k = 0; k < e && acyclic; ++k)
      if (mask & (1u << k)) acyclic = forest.unite(g.edges[k].first, g.edges[k].second);
    if (acyclic) ++count;
  }
  return count;
}

struct SandpileReport {
  BigInt lattice_degree;
  std::uint64_t spanning_trees = 0;
  BigInt reduced_laplacian_det;
  std::vector<BigInt> invariant_factors;
  bool agree = false;
};

inline SandpileReport check_sandpile(const GraphSpec& g) {
  SandpileReport r;
  const HomogeneousLattice l = build_laplacian_lattice(g);
  r.lattice_degree = degree(l);
  r.invariant_factors = l.invariant_factors();
  r.spanning_trees = spanning_tree_count(g);
  r.reduced_laplacian_det = reduced_laplacian_determinant(g);
  r.agree = r.lattice_degree == r.spanning_trees && r.lattice_degree == r.reduced_laplacian_det;
  return r;
}

}  // namespace latdeg
