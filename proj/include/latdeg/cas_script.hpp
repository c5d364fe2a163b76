#pragma once

#include "latdeg/lattice.hpp"

#include <sstream>
#include <string>

namespace latdeg {

enum class CasFormat { macaulay2, maple };

namespace detail {

// t1^e1*t2^e2..., exponent 1 elided, "1" for the empty monomial.
inline std::string format_monomial(const std::vector<BigInt>& exponents) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << '*';
    os << 't' << i + 1;
    if (exponents[i] != 1) os << '^' << exponents[i];
    first = false;
  }
  return first ? "1" : os.str();
}

inline std::string variable_list(std::size_t s, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s; ++i) os << (i ? std::string(1, sep) : "") << 't' << i + 1;
  return os.str();
}

}  // namespace detail

// t^{a+} - t^{a-} where a = a+ - a- with disjoint supports.
inline std::string lattice_binomial(std::span<const BigInt> a) {
  std::vector<BigInt> plus(a.size()), minus(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) plus[i] = a[i];
    if (a[i] < 0) minus[i] = -a[i];
  }
  return detail::format_monomial(plus) + "-" + detail::format_monomial(minus);
}

// Script for an external system: Macaulay2 computes I(L) as the saturation of
// the generator binomials by t1*...*ts and reports its degree; Maple computes
// the Smith form of the generator matrix.
inline std::string emit_cas_script(const HomogeneousLattice& l, CasFormat format) {
  const ZMatrix& a = l.generators();
  const std::size_t s = l.ambient_dim();
  std::ostringstream os;
  if (format == CasFormat::macaulay2) {
    const std::string h = detail::variable_list(s, '*');
    std::vector<std::string> binomials;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a.is_zero_row(i)) binomials.push_back(lattice_binomial(a.row(i)));
    os << "S=QQ[" << detail::variable_list(s, ',') << "]\n";
    os << "Q=ideal(";
    if (binomials.empty()) os << "0_S";
    for (std::size_t i = 0; i < binomials.size(); ++i) os << (i ? "," : "") << binomials[i];
    os << ")\n";
    os << "saturate(Q," << h << ")\n";
    os << "degree saturate(Q," << h << ")\n";
  } else {
    os << "with(LinearAlgebra):\n";
    if (a.rows() == 0 || s == 0) {
      os << "A:=Matrix(" << a.rows() << "," << s << "):\n";
    } else {
      os << "A:=<";
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < s; ++j) os << (j ? "," : "") << a(i, j);
      }
      os << ">:\n";
    }
    os << "SmithForm(A);\n";
  }
  return os.str();
}

}  // namespace latdeg
