#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid object: arc gaps, duplicate under-arcs, bad ranges.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A table that fails one of the three quandle axioms.
///
/// The witness holds the offending elements: (x) for idempotence, (y) for
/// right-invertibility and (x, y, z) for self-distributivity. Unused slots
/// are zero.
class AxiomViolation : public ValidationError {
 public:
  AxiomViolation(int axiom, std::array<std::uint32_t, 3> witness);

  int axiom() const noexcept { return axiom_; }
  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  int axiom_;
  std::array<std::uint32_t, 3> witness_;
};

class NotAUnit : public Error {
 public:
  NotAUnit(std::int64_t t, std::uint32_t n);

  std::int64_t t() const noexcept { return t_; }
  std::uint32_t n() const noexcept { return n_; }

 private:
  std::int64_t t_;
  std::uint32_t n_;
};

/// Enumeration refused because the solution count is larger than the cap.
/// The count is a decimal string since it may not fit in a machine word.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string count, std::uint64_t cap);

  const std::string& count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string count_;
  std::uint64_t cap_;
};

}  // namespace qcolor
