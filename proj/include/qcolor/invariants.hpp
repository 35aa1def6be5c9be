#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcolor/presentation.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/smith.hpp"
#include "qcolor/solver.hpp"

namespace qcolor {

/// Enhanced counting polynomial: sum over colorings of q^|Im f|, stored as
/// exponent -> coefficient.
struct PhiPolynomial {
  std::map<std::size_t, std::uint64_t> terms;

  std::uint64_t total() const;
  /// "3*q^1 + 6*q^3", exponents ascending; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const PhiPolynomial&, const PhiPolynomial&) = default;
};

/// |Hom(Q(L), X)|. Alexander quandles take the Smith-form path and never
/// hit the cap; other quandles are counted by backtracking.
BigInt counting_invariant(const QuandlePresentation& p, const FiniteQuandle& q,
                          std::uint64_t cap = kDefaultCap);

/// Needs every coloring, so throws CapExceeded above cap.
PhiPolynomial phi_polynomial(const QuandlePresentation& p, const FiniteQuandle& q,
                             std::uint64_t cap = kDefaultCap);

/// Units t of Z_n with t^2 = 1 (mod n), ascending.
std::vector<std::uint32_t> involutory_units(std::uint32_t n);
/// Units t of Z_n, ascending.
std::vector<std::uint32_t> units(std::uint32_t n);

struct InvolutoryRow {
  std::uint32_t t = 0;
  BigInt count;
};

/// Counting invariant for every involutory Alexander quandle over Z_n.
std::vector<InvolutoryRow> involutory_analysis(const QuandlePresentation& p, std::uint32_t n);

struct TPolicy {
  enum class Kind { all_units, involutory, single };
  Kind kind = Kind::all_units;
  std::int64_t t = 0;  // used by single

  static TPolicy all_units() { return {Kind::all_units, 0}; }
  static TPolicy involutory() { return {Kind::involutory, 0}; }
  static TPolicy single(std::int64_t t) { return {Kind::single, t}; }

  /// "all-units", "involutory" or an integer.
  static TPolicy parse(const std::string& text);
  std::string to_string() const;
};

struct GridRow {
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  BigInt count_a;
  BigInt count_b;
  std::optional<PhiPolynomial> phi_a;  // empty when the cell is count-only
  std::optional<PhiPolynomial> phi_b;

  bool differs() const;
};

struct DistinguishabilityReport {
  std::string link_a;
  std::string link_b;
  std::vector<GridRow> grid;
  bool distinguished = false;

  std::string verdict() const { return distinguished ? "distinguished" : "not distinguished"; }
};

/// Evaluates both links on every (n, t) cell, cells in parallel, rows in
/// (n, t) order. A single(t) policy throws NotAUnit if t is not a unit for
/// some n. Cells whose colorings exceed cap keep their counts and drop Phi.
DistinguishabilityReport compare(const QuandlePresentation& a, const QuandlePresentation& b,
                                 std::string link_a, std::string link_b,
                                 const std::vector<std::uint32_t>& n_values, TPolicy policy,
                                 std::uint64_t cap = kDefaultCap);

// Serialization

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const PhiPolynomial& phi);
PhiPolynomial phi_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const DistinguishabilityReport& r);
DistinguishabilityReport report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const DistinguishabilityReport& r);

}  // namespace qcolor
