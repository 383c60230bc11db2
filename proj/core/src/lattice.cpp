#include "kdecomp/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kdecomp {

namespace {

Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = gcd_int(g, x);
  return g;
}

}  // namespace

PrimitiveVector::PrimitiveVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("primitive vector must have dimension >= 1");
  Int g = vector_gcd(coords_);
  if (g == 0) throw DomainError("zero vector does not generate a cyclic subgroup");
  if (g != 1) throw DomainError("coordinates are not coprime; canonicalize first");
  for (Int x : coords_) {
    if (x == 0) continue;
    if (x < 0) throw DomainError("canonical form requires a positive first nonzero coordinate");
    break;
  }
}

PrimitiveVector PrimitiveVector::canonical(const std::vector<Int>& v) {
  if (v.empty()) throw DomainError("primitive vector must have dimension >= 1");
  Int g = vector_gcd(v);
  if (g == 0) throw DomainError("zero vector does not generate a cyclic subgroup");
  std::vector<Int> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i] / g;
  for (Int x : c) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : c) y = checked_neg(y);
    break;
  }
  return PrimitiveVector(std::move(c));
}

PrimitiveVector canonical_primitive(const std::vector<Int>& v) {
  return PrimitiveVector::canonical(v);
}

bool PrimitiveVector::all_nonzero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x != 0; });
}

bool PrimitiveVector::all_positive() const {
  // On canonical representatives, "some generator has all positive
  // coordinates" reduces to the representative itself being positive.
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x > 0; });
}

std::string PrimitiveVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::vector<PrimitiveVector> enumerate_subgroups(Int n, Int height, SubgroupFilter filter) {
  if (n < 1) throw DomainError("enumerate_subgroups requires n >= 1");
  if (height < 1) throw DomainError("enumerate_subgroups requires height >= 1");
  std::set<std::vector<Int>> seen;
  std::vector<Int> v(static_cast<std::size_t>(n), -height);
  // Odometer scan over [-height, height]^n; canonicalization dedupes the
  // +-v and scalar-multiple collisions.
  for (;;) {
    bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
    if (!zero) seen.insert(PrimitiveVector::canonical(v).coords());
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      if (v[i] < height) {
        ++v[i];
        break;
      }
      v[i] = -height;
    }
    if (i == v.size()) break;
  }
  std::vector<PrimitiveVector> out;
  for (const auto& c : seen) {
    PrimitiveVector p(c);
    if (filter == SubgroupFilter::nonzero && !p.all_nonzero()) continue;
    if (filter == SubgroupFilter::positive && !p.all_positive()) continue;
    out.push_back(std::move(p));
  }
  // std::set already yields lexicographic order on coordinates.
  return out;
}

PrimitiveVector fold_to_positive(const PrimitiveVector& v) {
  if (!v.all_nonzero())
    throw DomainError("fold_to_positive requires all coordinates nonzero: " + v.to_string());
  std::vector<Int> a = v.coords();
  for (auto& x : a)
    if (x < 0) x = checked_neg(x);
  return PrimitiveVector::canonical(a);
}

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_unimodular()) throw DomainError("matrix is not unimodular: " + m_.to_string());
}

namespace {

// Recursive basis completion.  The first column of the result is v; the
// determinant is +-1.  Deterministic: the Bezout pair (a, b) with
// a*v1 + b*g = 1 is normalized to 0 <= a < g when g != 0.
IntMatrix complete_recursive(const std::vector<Int>& v) {
  std::size_t n = v.size();
  if (n == 1) {
    IntMatrix m(1, 1);
    m(0, 0) = v[0];  // +-1 by primitivity
    return m;
  }
  std::vector<Int> tail(v.begin() + 1, v.end());
  Int g = 0;
  for (Int x : tail) g = gcd_int(g, x);
  if (g == 0) {
    // v = (+-1, 0, ..., 0)
    IntMatrix m = IntMatrix::identity(n);
    m(0, 0) = v[0];
    return m;
  }
  std::vector<Int> w(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) w[i] = tail[i] / g;
  IntMatrix inner = complete_recursive(w);

  ExtGcd e = ext_gcd(v[0], g);  // a*v0 + b*g = 1 since gcd(v0, g) = 1
  Int a = e.x, b = e.y;
  if (g != 0) {
    Int t = a / g;
    if (a - t * g < 0) t -= 1;  // floor, so a - t*g lands in [0, g)
    a = checked_sub(a, checked_mul(t, g));
    b = checked_add(b, checked_mul(t, v[0]));
  }

  // [  v0  -b   0 ]
  // [ g*w  a*w  W']   with W' = columns 1.. of the inner completion.
  IntMatrix m(n, n);
  m(0, 0) = v[0];
  m(0, 1) = checked_neg(b);
  for (std::size_t i = 0; i < w.size(); ++i) {
    m(1 + i, 0) = checked_mul(g, w[i]);
    m(1 + i, 1) = checked_mul(a, w[i]);
    for (std::size_t j = 1; j < inner.cols(); ++j) m(1 + i, 1 + j) = inner(i, j);
  }
  return m;
}

}  // namespace

UnimodularMatrix complete_to_basis(const PrimitiveVector& v) {
  IntMatrix m = complete_recursive(v.coords());
  return UnimodularMatrix(std::move(m));
}

}  // namespace kdecomp
