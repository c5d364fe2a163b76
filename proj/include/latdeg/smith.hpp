#pragma once

#include "latdeg/zmatrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace latdeg {

// u * a * v == d with u, v unimodular and d diagonal; the first `rank`
// diagonal entries are the invariant factors d_1 | d_2 | ... | d_r, all
// positive, followed by zeros.
struct SmithDecomposition {
  ZMatrix u;
  ZMatrix d;
  ZMatrix v;
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

namespace detail {

using Position = std::pair<std::size_t, std::size_t>;

// Nonzero entry of least absolute value in the trailing block starting at
// (t, t), scanning row-major; ties keep the first one found.
inline std::optional<Position> smallest_entry(const ZMatrix& d, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& x = d(i, j);
      if (x == 0) continue;
      BigInt ax = abs(x);
      if (!best || ax < best_abs) {
        best = Position{i, j};
        best_abs = std::move(ax);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Same, restricted to column t below the pivot and row t right of it.
inline std::optional<Position> smallest_in_cross(const ZMatrix& d, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    const BigInt& x = d(i, j);
    if (x == 0) return;
    BigInt ax = abs(x);
    if (!best || ax < best_abs) {
      best = Position{i, j};
      best_abs = std::move(ax);
    }
  };
  for (std::size_t i = t; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

struct SmithWork {
  ZMatrix u, d, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    d.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    d.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
  }
  void move_to_pivot(std::size_t t, Position p) {
    swap_rows(t, p.first);
    swap_cols(t, p.second);
  }

  // Divides the pivot into its column and row. Returns true when every
  // off-pivot entry of row t and column t is now zero.
  bool reduce_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      BigInt q = d(i, t) / d(t, t);
      add_row_multiple(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      BigInt q = d(t, j) / d(t, t);
      add_col_multiple(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> row_not_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(i, j) % d(t, t) != 0) return i;
    return std::nullopt;
  }
};

}  // namespace detail

// Classical elimination with least-magnitude pivoting. Exact; no modular
// shortcuts, so the transforms are always available.
inline SmithDecomposition smith_normal_form(const ZMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  detail::SmithWork w{ZMatrix::identity(m), a, ZMatrix::identity(n)};

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    auto pivot = detail::smallest_entry(w.d, t);
    if (!pivot) break;
    w.move_to_pivot(t, *pivot);
    for (;;) {
      if (!w.reduce_cross(t)) {
        w.move_to_pivot(t, *detail::smallest_in_cross(w.d, t));
        continue;
      }
      // Force d_t | every remaining entry: pulling an offending row into
      // row t leaves a remainder that shrinks the pivot next round.
      if (auto i = w.row_not_divisible(t)) {
        w.add_row_multiple(t, *i, 1);
        continue;
      }
      break;
    }
    if (w.d(t, t) < 0) {
      w.d.negate_row(t);
      w.u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(w.u), std::move(w.d), std::move(w.v), {}, t};
  out.invariant_factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(out.d(i, i));
  return out;
}

}  // namespace latdeg
