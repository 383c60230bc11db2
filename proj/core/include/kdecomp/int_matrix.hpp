#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "kdecomp/errors.hpp"

namespace kdecomp {

using Int = std::int64_t;

// Checked 64-bit arithmetic.  Every matrix operation in this library goes
// through these; on overflow they throw instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

// gcd(|a|, |b|); gcd(0, 0) = 0.
Int gcd_int(Int a, Int b);

// g = a*x + b*y with g = gcd(|a|, |b|) >= 0.
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

// Exact binomial coefficient; 0 for k < 0 or k > n.
Int binomial(Int n, Int k);

// Dense matrix over Z with exact (checked) arithmetic.  Zero-row and
// zero-column matrices are first-class citizens: empty relation blocks and
// maps to/from the trivial group show up everywhere in this library.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix column_vector(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix multiply(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix negated() const;
  IntMatrix subtract(const IntMatrix& rhs) const;

  std::vector<Int> column(std::size_t c) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * vector

  // [this | rhs], row counts must agree.
  IntMatrix hcat(const IntMatrix& rhs) const;
  // Copy src into this at offset (r0, c0); must fit.
  void paste(const IntMatrix& src, std::size_t r0, std::size_t c0);
  IntMatrix submatrix_cols(const std::vector<std::size_t>& cols) const;

  // Elementary operations used by the normal form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);  // row_dst += f*row_src
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);  // col_dst += f*col_src

  // Exact determinant (Bareiss).  Square matrices only; det of the 0x0
  // matrix is 1.
  Int determinant() const;
  bool is_unimodular() const;

  std::string to_string() const;  // "[[1,2],[3,4]]"

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return a.multiply(b); }

}  // namespace kdecomp
