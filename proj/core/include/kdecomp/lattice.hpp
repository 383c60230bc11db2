#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kdecomp/abelian.hpp"
#include "kdecomp/int_matrix.hpp"

namespace kdecomp {

// Canonical representative of a maximal cyclic subgroup of Z^n: coordinates
// have gcd 1 and the first nonzero coordinate is positive.  Two integer
// vectors generate the same maximal cyclic subgroup (after saturation) iff
// their canonical representatives are equal.
class PrimitiveVector {
 public:
  // Validating constructor: coords must already be in canonical form.
  explicit PrimitiveVector(std::vector<Int> coords);

  // Canonicalize any nonzero integer vector: divide by the gcd and normalize
  // the sign.  Throws DomainError on the zero vector.
  static PrimitiveVector canonical(const std::vector<Int>& v);

  const std::vector<Int>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

  bool all_nonzero() const;
  bool all_positive() const;

  auto operator<=>(const PrimitiveVector&) const = default;

  std::string to_string() const;  // "(1,-2)"

 private:
  std::vector<Int> coords_;
};

PrimitiveVector canonical_primitive(const std::vector<Int>& v);

enum class SubgroupFilter {
  all,      // every maximal cyclic subgroup
  nonzero,  // generators with every coordinate nonzero
  positive  // some generator has all coordinates positive
};

// All maximal cyclic subgroups of Z^n whose canonical generator has
// max-norm <= height, restricted by the filter, in lexicographic order.
// Any finite listing is a truncation of the (infinite, for n >= 2) full set;
// callers are responsible for reporting the height.
std::vector<PrimitiveVector> enumerate_subgroups(Int n, Int height, SubgroupFilter filter);

// Coordinatewise absolute value: the 2^(n-1)-to-1 fold from all-nonzero
// subgroups onto all-positive ones.  Requires every coordinate nonzero.
PrimitiveVector fold_to_positive(const PrimitiveVector& v);

// Square integer matrix with determinant +-1: a Z-basis of Z^n by columns.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m);
  const IntMatrix& matrix() const { return m_; }

 private:
  IntMatrix m_;
};

// Completes a primitive vector to a Z-basis: the result has first column v
// and determinant +-1.  Deterministic (recursive extended-gcd construction).
UnimodularMatrix complete_to_basis(const PrimitiveVector& v);

}  // namespace kdecomp
