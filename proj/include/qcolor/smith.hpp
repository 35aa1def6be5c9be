#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace qcolor {

using BigInt = mpz_class;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... | d_rank, all d_i > 0.
struct SmithForm {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, length rank
  std::size_t rank = 0;
  IntMatrix left;   // U, rows x rows
  IntMatrix right;  // V, cols x cols

  /// D as a rows x cols matrix.
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Minimal-|pivot| elimination with Euclidean reduction.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace qcolor
