#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcolor/presentation.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/smith.hpp"

namespace qcolor {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Integer coefficient matrix of the homogeneous system over Z_n induced by
/// an Alexander quandle, one row per relation and one column per arc.
struct ColoringSystem {
  AlexanderParams params;
  IntMatrix matrix;

  std::size_t rows() const noexcept { return matrix.rows(); }
  std::size_t cols() const noexcept { return matrix.cols(); }
};

/// An assignment of colors to arcs; assignment[i] colors arc i + 1.
struct Coloring {
  std::vector<Element> assignment;
  std::size_t image_size = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) {
    return a.assignment <=> b.assignment;
  }
};

std::size_t image_size(const std::vector<Element>& assignment);

/// Row for out = in |> over: +t at in, +(1 - t) at over, -1 at out.
/// Negative relations use t^-1 mod n in place of t. Coinciding arcs add.
ColoringSystem build_system(const QuandlePresentation& p, const AlexanderParams& params);

/// Number of x in Z_n^cols with A x = 0 (mod n):
/// n^(cols - rank) * prod gcd(d_i, n) over the Smith invariant factors.
BigInt count_solutions(const ColoringSystem& sys, std::uint32_t n);
BigInt count_solutions(const SmithForm& snf, std::size_t cols, std::uint32_t n);

/// All solutions of A x = 0 (mod n), generated through the Smith right
/// transform. Sorted by assignment. Throws CapExceeded when the count is
/// above cap.
std::vector<Coloring> enumerate_solutions(const ColoringSystem& sys, std::uint32_t n,
                                          std::uint64_t cap = kDefaultCap);

/// Backtracking over arcs in index order; a relation is tested once all
/// three of its arcs have colors. Works for any finite quandle. Sorted by
/// assignment. Throws CapExceeded past cap colorings.
std::vector<Coloring> brute_force_colorings(const QuandlePresentation& p, const FiniteQuandle& q,
                                            std::uint64_t cap = kDefaultCap);

/// Streams every coloring to `visit` without storing them. Returns the
/// number of colorings found. Visiting stops early when `visit` returns
/// false.
std::uint64_t for_each_coloring(const QuandlePresentation& p, const FiniteQuandle& q,
                                const std::function<bool(const std::vector<Element>&)>& visit);

/// Audit dump: header "rows cols n t" and one line per row.
std::string dump_matrix(const IntMatrix& m, std::uint32_t n, std::uint32_t t);

}  // namespace qcolor
