#pragma once

#include "latdeg/zmatrix.hpp"

#include <optional>

namespace latdeg {

// Row-style Hermite normal form: transform * a == h, transform unimodular.
// Pivots move strictly right, are positive, and entries above a pivot lie in
// [0, pivot). Rows past `rank` are zero.
struct HermiteForm {
  ZMatrix h;
  ZMatrix transform;
  std::size_t rank = 0;

  // The nonzero rows of h, a basis of the row lattice of the input.
  ZMatrix basis() const {
    ZMatrix b(rank, h.cols());
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) b(i, j) = h(i, j);
    return b;
  }
};

inline HermiteForm hermite_normal_form(const ZMatrix& a) {
  HermiteForm out{a, ZMatrix::identity(a.rows()), 0};
  ZMatrix& h = out.h;
  ZMatrix& t = out.transform;
  std::size_t r = 0;

  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid down column c until a single nonzero entry remains at row r.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (!best || abs(h(i, c)) < abs(h(*best, c))) best = i;
      }
      if (!best) break;
      h.swap_rows(r, *best);
      t.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        BigInt q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      t.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

// Z-basis (as rows) of {x : x * a == 0}. The basis is returned in Hermite
// form; a trivial kernel gives a 0 x a.rows() matrix.
inline ZMatrix integer_kernel(const ZMatrix& a) {
  HermiteForm hf = hermite_normal_form(a);
  const std::size_t m = a.rows();
  ZMatrix kernel(m - hf.rank, m);
  for (std::size_t i = hf.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) kernel(i - hf.rank, j) = hf.transform(i, j);
  if (kernel.rows() == 0) return kernel;
  return hermite_normal_form(kernel).basis();
}

}  // namespace latdeg
