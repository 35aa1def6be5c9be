#include "qcolor/smith.hpp"

#include <algorithm>
#include <utility>

namespace qcolor {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < rank; ++i) d(i, i) = diagonal[i];
  return d;
}

namespace {

// Position of the smallest nonzero |entry| in the trailing block, or false.
bool find_pivot(const IntMatrix& a, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) {
      const BigInt& v = a(i, j);
      if (v == 0) continue;
      if (!found || abs(v) < best) {
        best = abs(v);
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());

  std::size_t k = 0;
  for (; k < limit; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, k, pr, pc)) break;
    while (true) {
      a.swap_rows(k, pr);
      u.swap_rows(k, pr);
      a.swap_cols(k, pc);
      v.swap_cols(k, pc);

      // Euclidean step on column k and row k. Any nonzero remainder is
      // smaller than the pivot and becomes the next pivot.
      bool dirty = false;
      BigInt q;
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (a(i, k) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        a.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (a(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(k, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
        a.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (a(k, j) != 0) dirty = true;
      }
      if (dirty) {
        // Restrict the pivot search to row k and column k.
        BigInt best = abs(a(k, k));
        pr = k;
        pc = k;
        for (std::size_t i = k + 1; i < a.rows(); ++i)
          if (a(i, k) != 0 && abs(a(i, k)) < best) {
            best = abs(a(i, k));
            pr = i;
            pc = k;
          }
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (a(k, j) != 0 && abs(a(k, j)) < best) {
            best = abs(a(k, j));
            pr = k;
            pc = j;
          }
        continue;
      }

      // Divisibility: fold a row holding a non-multiple into row k.
      bool folded = false;
      for (std::size_t i = k + 1; i < a.rows() && !folded; ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
            a.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            folded = true;
            break;
          }
      if (!folded) break;
      pr = k;
      pc = k;
    }
    if (a(k, k) < 0) {
      a.negate_row(k);
      u.negate_row(k);
    }
  }

  SmithForm snf;
  snf.rank = k;
  for (std::size_t i = 0; i < k; ++i) snf.diagonal.push_back(a(i, i));
  snf.left = std::move(u);
  snf.right = std::move(v);
  return snf;
}

}  // namespace qcolor
