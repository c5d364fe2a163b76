#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a mathematical precondition. The CLI maps these to exit 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or text. The CLI maps these to exit 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("ParseError{line " + std::to_string(line) + "}: " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonSquare : public DomainError {
 public:
  NonSquare(std::size_t rows, std::size_t cols)
      : DomainError("NonSquare{" + std::to_string(rows) + "x" + std::to_string(cols) + "}") {}
};

class DimensionMismatch : public DomainError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : DomainError("DimensionMismatch{expected " + std::to_string(expected) + ", got " +
                    std::to_string(got) + "}"),
        expected_(expected),
        got_(got) {}
  std::size_t expected() const { return expected_; }
  std::size_t got() const { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class NotHomogeneous : public DomainError {
 public:
  explicit NotHomogeneous(std::size_t row)
      : DomainError("NotHomogeneous{row " + std::to_string(row) + "}: generator row sum is not zero"),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class RankMismatch : public DomainError {
 public:
  RankMismatch(std::size_t expected, std::size_t got)
      : DomainError("RankMismatch{expected " + std::to_string(expected) + ", got " +
                    std::to_string(got) + "}"),
        expected_(expected),
        got_(got) {}
  std::size_t expected() const { return expected_; }
  std::size_t got() const { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(std::string needed, std::string budget)
      : DomainError("BudgetExceeded{needed " + needed + ", budget " + budget + "}"),
        needed_(std::move(needed)),
        budget_(std::move(budget)) {}
  const std::string& needed() const { return needed_; }
  const std::string& budget() const { return budget_; }

 private:
  std::string needed_;
  std::string budget_;
};

class NotStabilized : public DomainError {
 public:
  explicit NotStabilized(std::size_t d_max)
      : DomainError("NotStabilized{d_max " + std::to_string(d_max) +
                    "}: no finite-difference order has a constant tail") {}
};

class NonPrimeField : public DomainError {
 public:
  explicit NonPrimeField(std::uint64_t q)
      : DomainError("NonPrimeField{q " + std::to_string(q) + "}") {}
};

class Disconnected : public DomainError {
 public:
  Disconnected() : DomainError("Disconnected: graph is not connected") {}
};

class InvalidInput : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace latdeg
