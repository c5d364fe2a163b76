#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latdeg {

using BigInt = boost::multiprecision::cpp_int;
using ZVector = std::vector<BigInt>;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Throws std::runtime_error on malformed input (anything but an optional sign
// followed by decimal digits).
inline BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::runtime_error("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::runtime_error("not an integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-value) : value;
}

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

// Quotient rounded toward negative infinity; b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Representative in [0, |m|); m != 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline BigInt product(const std::vector<BigInt>& xs) {
  BigInt p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

inline std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(x);
}

}  // namespace latdeg
