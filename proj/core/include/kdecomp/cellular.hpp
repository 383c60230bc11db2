#pragma once

#include <optional>
#include <vector>

#include "kdecomp/abelian.hpp"

namespace kdecomp {

// Bounded chain complex of free abelian groups: ranks[i] is the rank of C_i
// and boundaries[i] is d_{i+1} : C_{i+1} -> C_i, so boundaries.size() =
// ranks.size() - 1.  Consecutive boundaries compose to zero.
struct ChainComplex {
  std::vector<Int> ranks;
  std::vector<IntMatrix> boundaries;

  Int top_degree() const { return static_cast<Int>(ranks.size()) - 1; }
  Int rank(Int degree) const;
  // d_i : C_i -> C_{i-1} for 1 <= i <= top; zero-shaped matrices outside.
  IntMatrix boundary(Int i) const;
  void validate() const;  // shapes and d o d = 0
};

ChainComplex point_complex();
ChainComplex circle_complex();  // one 0-cell, one 1-cell, zero boundary
// Tensor product with Koszul signs: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);
// k-fold tensor power of the circle: C_i has rank binomial(k, i).
ChainComplex torus_complex(Int k);
// Interval (two 0-cells, one 1-cell); handy nonzero-boundary test complex.
ChainComplex interval_complex();

// Integral homology, degree by degree, computed via Smith normal form.
std::vector<FGAbelianGroup> integral_homology(const ChainComplex& c);

// Coefficient module: a presented abelian group, optionally with an
// involution (a self-map whose square is the identity on the group).
struct CoefficientModule {
  PresentedAbelianGroup group;
  std::optional<Homomorphism> involution;

  static CoefficientModule plain(PresentedAbelianGroup g) { return {std::move(g), std::nullopt}; }
  static CoefficientModule with_involution(PresentedAbelianGroup g, IntMatrix involution_matrix);
};

// Homology of C (x) M: the coefficient group is substituted degreewise and
// the boundaries act blockwise.  The involution, if any, is ignored.
std::vector<FGAbelianGroup> homology_with_coefficients(const ChainComplex& c,
                                                       const CoefficientModule& m);

// Degreewise self-map of a chain complex.
struct ChainMap {
  std::vector<IntMatrix> maps;  // maps[i] : C_i -> C_i

  static ChainMap identity(const ChainComplex& c);
  static ChainMap scalar(const ChainComplex& c, Int s);
};

// Homology of the algebraic mapping torus of f, i.e. of the mapping cone of
// (1 - f) : C -> C, with T_n = C_{n-1} + C_n.  For f = id this yields
// H_n(C) + H_{n-1}(C) in every degree.  Throws unless f is a chain map.
std::vector<FGAbelianGroup> mapping_torus_homology(const ChainComplex& c, const ChainMap& f);

// Group homology H_i(Z/2; M) for 0 <= i <= top_degree, computed from the
// 2-periodic free resolution: the differentials alternate 1 - t, 1 + t, and
// H_0 is the coinvariants.  Requires the involution to be present, well
// defined, and of order <= 2.
std::vector<FGAbelianGroup> z2_homology(const CoefficientModule& m, Int top_degree);

}  // namespace kdecomp
