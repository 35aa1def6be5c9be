#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qcolor/smith.hpp"
#include "qcolor/solver.hpp"

using namespace qcolor;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  return m;
}

bool unimodular(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  if (s.rank != m.rows()) return false;
  for (const BigInt& d : s.diagonal)
    if (d != 1) return false;
  return true;
}

void check_smith(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  CHECK(s.left * a * s.right == s.diagonal_matrix(a.rows(), a.cols()));
  for (std::size_t i = 0; i < s.rank; ++i) {
    CHECK(s.diagonal[i] > 0);
    if (i + 1 < s.rank) CHECK(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()));
  }
  CHECK(unimodular(s.left));
  CHECK(unimodular(s.right));
}

}  // namespace

TEST_CASE("textbook example") {
  const IntMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const SmithForm s = smith_normal_form(a);
  CHECK(s.rank == 3);
  CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});
  check_smith(a);
}

TEST_CASE("degenerate shapes") {
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(3, 0));
  check_smith(IntMatrix(2, 2));
  const SmithForm z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.diagonal.empty());
}

TEST_CASE("diag(2, 2) over Z_4 has 4 solutions") {
  const std::vector<std::vector<std::int64_t>> rows = {{2, 0}, {0, 2}};
  CHECK(oracle::count_linear(rows, 2, 4) == 4);
  ColoringSystem sys;
  sys.matrix = from_rows(rows, 2);
  CHECK(count_solutions(sys, 4) == 4);
}

TEST_CASE("random matrices: reconstruction and counts against enumeration") {
  std::mt19937_64 rng(20221);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<std::int64_t>> raw(rows, std::vector<std::int64_t>(cols));
    for (auto& r : raw)
      for (auto& v : r) v = entry(rng);
    const IntMatrix a = from_rows(raw, cols);
    check_smith(a);
    ColoringSystem sys;
    sys.matrix = a;
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(count_solutions(sys, n) == oracle::count_linear(raw, cols, n));
    }
  }
}

TEST_CASE("entries beyond machine words") {
  IntMatrix a(2, 2);
  a(0, 0) = BigInt("340282366920938463463374607431768211456");  // 2^128
  a(0, 1) = 3;
  a(1, 0) = 6;
  a(1, 1) = BigInt("-170141183460469231731687303715884105728");
  check_smith(a);
}
