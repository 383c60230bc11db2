#include "kdecomp/int_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kdecomp {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd_int(Int a, Int b) {
  if (a == std::numeric_limits<Int>::min() || b == std::numeric_limits<Int>::min())
    throw OverflowError("gcd of INT64_MIN is not representable");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtGcd ext_gcd(Int a, Int b) {
  // Iterative extended Euclid on the absolute values, signs fixed up at the end.
  Int sa = a < 0 ? -1 : 1, sb = b < 0 ? -1 : 1;
  Int r0 = a < 0 ? checked_neg(a) : a, r1 = b < 0 ? checked_neg(b) : b;
  Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int x2 = checked_sub(x0, checked_mul(q, x1));
    Int y2 = checked_sub(y0, checked_mul(q, y1));
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
    y0 = y1; y1 = y2;
  }
  return ExtGcd{r0, checked_mul(sa, x0), checked_mul(sb, y0)};
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // Multiply first, divide after: the intermediate product is always an
    // exact multiple of i.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Int>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = checked_neg(x);
  return out;
}

IntMatrix IntMatrix::subtract(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = checked_sub(out.data_[i], rhs.data_[i]);
  return out;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ShapeError("hcat row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  out.paste(*this, 0, 0);
  out.paste(rhs, 0, cols_);
  return out;
}

void IntMatrix::paste(const IntMatrix& src, std::size_t r0, std::size_t c0) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw ShapeError("paste out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_neg((*this)(i, c));
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = checked_neg((*this)(r, i));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw ShapeError("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  // Bareiss fraction-free elimination; all divisions are exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

namespace {

// Primes just below 2^31, found lazily; entries mod p then multiply within
// int64 during elimination.
const std::vector<Int>& unimodular_test_primes() {
  static const std::vector<Int> primes = [] {
    auto is_prime = [](Int n) {
      for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
      return true;
    };
    std::vector<Int> out;
    for (Int c = (Int{1} << 31) - 1; out.size() < 48; c -= 2)
      if (is_prime(c)) out.push_back(c);
    return out;
  }();
  return primes;
}

Int det_mod_p(const IntMatrix& m, Int p) {
  std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = ((m(i, j) % p) + p) % p;
  auto mod_pow = [p](Int base, Int exp) {
    Int result = 1;
    base %= p;
    while (exp > 0) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  };
  Int det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = p - det;
    }
    det = det * a[k][k] % p;
    Int inv = mod_pow(a[k][k], p - 2);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Int f = a[i][k] * inv % p;
      for (std::size_t j = k; j < n; ++j) a[i][j] = (a[i][j] + (p - f) * a[k][j]) % p;
    }
  }
  return det % p;
}

}  // namespace

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  try {
    Int d = determinant();
    return d == 1 || d == -1;
  } catch (const OverflowError&) {
    // Exact fallback: det mod enough primes that their product exceeds twice
    // the Hadamard bound pins the determinant down completely.
  }
  std::size_t n = rows_;
  long double log2_bound = 0;
  for (std::size_t j = 0; j < n; ++j) {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double x = static_cast<long double>((*this)(i, j));
      s += x * x;
    }
    if (s == 0) return false;
    log2_bound += std::log2(s) / 2;
  }
  long double have = 0;
  bool plus = true, minus = true;
  for (Int p : unimodular_test_primes()) {
    Int r = det_mod_p(*this, p);
    plus = plus && (r == 1);
    minus = minus && (r == p - 1);
    if (!plus && !minus) return false;
    have += std::log2(static_cast<long double>(p));
    if (have > log2_bound + 2) return plus || minus;
  }
  throw OverflowError("unimodularity test ran out of moduli");
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace kdecomp
