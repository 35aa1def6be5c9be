#include "qcolor/error.hpp"

#include <string>

namespace qcolor {

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

std::string describe_axiom(int axiom, const std::array<std::uint32_t, 3>& w) {
  switch (axiom) {
    case 1:
      return "idempotence fails at x = " + std::to_string(w[0]);
    case 2:
      return "column map is not a bijection at y = " + std::to_string(w[0]);
    default:
      return "self-distributivity fails at (x, y, z) = (" + std::to_string(w[0]) + ", " +
             std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
  }
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(located(what, line, column)), line_(line), column_(column) {}

AxiomViolation::AxiomViolation(int axiom, std::array<std::uint32_t, 3> witness)
    : ValidationError("quandle axiom " + std::to_string(axiom) + " violated: " +
                      describe_axiom(axiom, witness)),
      axiom_(axiom),
      witness_(witness) {}

NotAUnit::NotAUnit(std::int64_t t, std::uint32_t n)
    : Error("t = " + std::to_string(t) + " is not a unit modulo " + std::to_string(n)), t_(t), n_(n) {}

CapExceeded::CapExceeded(std::string count, std::uint64_t cap)
    : Error("enumeration refused: " + count + " colorings exceed the cap of " + std::to_string(cap)),
      count_(std::move(count)),
      cap_(cap) {}

}  // namespace qcolor
