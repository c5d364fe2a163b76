#pragma once

#include "latdeg/zmatrix.hpp"

namespace latdeg {

// Bareiss fraction-free elimination; every division is exact.
inline BigInt determinant(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw NonSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace latdeg
