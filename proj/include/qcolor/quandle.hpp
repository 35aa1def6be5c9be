#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcolor {

using Element = std::uint32_t;

/// Parameters of the Alexander quandle x |> y = t*x + (1 - t)*y on Z_n.
struct AlexanderParams {
  std::uint32_t n = 0;
  std::uint32_t t = 0;  // reduced to [0, n)

  std::uint32_t s() const noexcept { return (n + 1 - t) % n; }
  friend bool operator==(const AlexanderParams&, const AlexanderParams&) = default;
};

/// Inverse of t modulo n, or nullopt when gcd(t, n) != 1.
std::optional<std::uint32_t> inverse_mod(std::int64_t t, std::uint32_t n);

/// Finite quandle on {0, ..., m-1} stored as its full operation table
/// together with the dual (right-inverse) table.
class FiniteQuandle {
 public:
  /// Checks idempotence, right-invertibility and self-distributivity, in
  /// that order, and derives the dual table. Throws AxiomViolation with the
  /// first witness found, or ValidationError for a ragged or out-of-range
  /// table.
  static FiniteQuandle validate(const std::vector<std::vector<Element>>& table);

  /// Throws NotAUnit when gcd(n, t) != 1, ValidationError when n < 2.
  static FiniteQuandle alexander(std::uint32_t n, std::int64_t t);
  /// x |> y = 2y - x; the same table as alexander(n, n - 1).
  static FiniteQuandle takasaki(std::uint32_t n);
  /// x |> y = x.
  static FiniteQuandle trivial(std::uint32_t m);

  std::uint32_t order() const noexcept { return order_; }
  Element op(Element x, Element y) const noexcept { return op_[x * order_ + y]; }
  Element dual(Element x, Element y) const noexcept { return dual_[x * order_ + y]; }

  /// Set only for tables built by alexander() or takasaki().
  const std::optional<AlexanderParams>& alexander_params() const noexcept { return params_; }

  std::vector<std::vector<Element>> table() const;

  /// Table equality; the Alexander tag is ignored.
  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.order_ == b.order_ && a.op_ == b.op_;
  }

 private:
  std::uint32_t order_ = 0;
  std::vector<Element> op_;
  std::vector<Element> dual_;
  std::optional<AlexanderParams> params_;
};

/// (x |> y) |> y == x for all x, y, decided from the table.
bool is_involutory(const FiniteQuandle& q);

/// Reads "order: m" followed by m rows of m integers, row x column y
/// holding x |> y. The result is validated.
FiniteQuandle parse_quandle_table(std::string_view text);
std::string render_quandle_table(const FiniteQuandle& q);

}  // namespace qcolor
