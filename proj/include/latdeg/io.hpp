#pragma once

#include "latdeg/sandpile.hpp"
#include "latdeg/toric.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace latdeg {

namespace detail {

// Yields whitespace-separated tokens, skipping blank lines and lines whose
// first non-blank character is '#'. Tracks the current line for messages.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::size_t line() const { return line_; }

  // Tokens of the next content line; false at end of input.
  bool next_line(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      std::istringstream ls(text);
      tokens.clear();
      for (std::string tok; ls >> tok;) tokens.push_back(std::move(tok));
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> require_line(const char* what) {
    std::vector<std::string> tokens;
    if (!next_line(tokens)) throw ParseError(std::string("unexpected end of input, expected ") + what, line_);
    return tokens;
  }

  void require_end() {
    std::vector<std::string> tokens;
    if (next_line(tokens)) throw ParseError("unexpected trailing content", line_);
  }

  BigInt integer(const std::string& tok) const {
    try {
      return parse_bigint(tok);
    } catch (const std::runtime_error&) {
      throw ParseError("not an integer: '" + tok + "'", line_);
    }
  }

  std::uint64_t count(const std::string& tok, const char* what) const {
    BigInt v = integer(tok);
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(std::string(what) + " out of range: " + tok, line_);
    return static_cast<std::uint64_t>(v);
  }

  void expect_width(const std::vector<std::string>& tokens, std::size_t width) const {
    if (tokens.size() != width)
      throw ParseError("expected " + std::to_string(width) + " values, found " + std::to_string(tokens.size()),
                       line_);
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace detail

// "m s" header, then m rows of s integers.
inline ZMatrix parse_matrix(std::istream& in) {
  detail::TokenReader reader(in);
  auto header = reader.require_line("matrix header 'rows cols'");
  reader.expect_width(header, 2);
  const std::size_t m = reader.count(header[0], "row count");
  const std::size_t s = reader.count(header[1], "column count");
  ZMatrix a(m, s);
  // Rows of a zero-column matrix are blank lines, which the reader skips.
  for (std::size_t i = 0; s > 0 && i < m; ++i) {
    auto row = reader.require_line("matrix row");
    reader.expect_width(row, s);
    for (std::size_t j = 0; j < s; ++j) a(i, j) = reader.integer(row[j]);
  }
  reader.require_end();
  return a;
}

inline ZMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const ZMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
}

inline std::string format_matrix(const ZMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

// "q n s" header, then s rows of n nonnegative exponents.
inline ToricSetSpec parse_toric_spec(std::istream& in) {
  detail::TokenReader reader(in);
  auto header = reader.require_line("header 'q n s'");
  reader.expect_width(header, 3);
  ToricSetSpec spec;
  spec.q = reader.count(header[0], "q");
  spec.n = reader.count(header[1], "n");
  const std::size_t s = reader.count(header[2], "s");
  for (std::size_t i = 0; i < s; ++i) {
    auto row = reader.require_line("exponent row");
    reader.expect_width(row, spec.n);
    std::vector<std::uint64_t> v;
    for (const auto& tok : row) v.push_back(reader.count(tok, "exponent"));
    spec.exponents.push_back(std::move(v));
  }
  reader.require_end();
  return spec;
}

// "s" header, then one 1-indexed "i j" edge per line.
inline GraphSpec parse_graph(std::istream& in) {
  detail::TokenReader reader(in);
  auto header = reader.require_line("vertex count");
  reader.expect_width(header, 1);
  GraphSpec g;
  g.vertex_count = reader.count(header[0], "vertex count");
  std::vector<std::string> tokens;
  while (reader.next_line(tokens)) {
    reader.expect_width(tokens, 2);
    const auto i = reader.count(tokens[0], "vertex");
    const auto j = reader.count(tokens[1], "vertex");
    if (i == 0 || j == 0 || i > g.vertex_count || j > g.vertex_count)
      throw ParseError("vertex index out of range 1.." + std::to_string(g.vertex_count), reader.line());
    g.edges.emplace_back(i - 1, j - 1);
  }
  return g;
}

}  // namespace latdeg
