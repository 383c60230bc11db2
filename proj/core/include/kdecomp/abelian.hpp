#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdecomp/int_matrix.hpp"

namespace kdecomp {

// Finitely generated abelian group in canonical invariant-factor form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with every d_i >= 2 and d_i | d_{i+1}.
// Two groups are isomorphic iff the fields are equal.
struct FGAbelianGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free_of_rank(Int r);
  static FGAbelianGroup cyclic(Int d);  // d >= 1; d == 1 gives the trivial group
  // Canonicalize an arbitrary cyclic decomposition Z^rank + sum Z/m_i
  // (m_i >= 1 in any order) into invariant-factor form.
  static FGAbelianGroup from_cyclic_decomposition(Int rank, const std::vector<Int>& moduli);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  void validate() const;  // throws DomainError if not canonical

  bool operator==(const FGAbelianGroup&) const = default;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/4", ...
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

// H with H + H == G, when it exists.  Throws DomainError naming the odd free
// rank or the offending prime power otherwise.
FGAbelianGroup halve_group(const FGAbelianGroup& g);

std::vector<std::pair<Int, Int>> factorize(Int n);  // prime -> exponent, n >= 1

// Smith normal form a = u * d * v with u, v unimodular and d diagonal,
// d_i >= 0, d_i | d_{i+1}.  The inverses are accumulated alongside, so
// u * u_inv = 1 and v * v_inv = 1 exactly.
struct SnfResult {
  IntMatrix u, d, v, u_inv, v_inv;
  std::vector<Int> diagonal() const;           // min(rows, cols) entries
  std::vector<Int> nonzero_diagonal() const;   // the invariant factors, 1s included
};
SnfResult snf(const IntMatrix& a);

// Column-style Hermite normal form h = a * v with v unimodular.  Pivot rows
// strictly increase left to right, pivots are positive, entries left of a
// pivot are reduced into [0, pivot), entries right of a pivot are zero, and
// zero columns are collected at the right end.
struct HnfResult {
  IntMatrix h, v;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};
HnfResult hnf(const IntMatrix& a);

// Column lattice membership and exact linear solving over Z.
bool column_lattice_contains(const IntMatrix& generators, const std::vector<Int>& v);
// x with generators * x = v, if any.
std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& generators,
                                                        const std::vector<Int>& v);
// Columns form a basis of { x : a * x = 0 }.
IntMatrix kernel_basis(const IntMatrix& a);
// Basis of the lattice spanned by the columns (nonzero HNF columns).
IntMatrix column_lattice_basis(const IntMatrix& generators);

// Abelian group presented as Z^generators / (column lattice of relations).
// The relation matrix has `generators` rows; the number of columns is the
// number of relations (possibly zero).
struct PresentedAbelianGroup {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x #relations

  static PresentedAbelianGroup trivial() { return {0, IntMatrix(0, 0)}; }
  static PresentedAbelianGroup free_group(std::size_t g) { return {g, IntMatrix(g, 0)}; }
  static PresentedAbelianGroup from_group(const FGAbelianGroup& g);

  void validate() const;
  bool operator==(const PresentedAbelianGroup&) const = default;
};

PresentedAbelianGroup direct_sum(const PresentedAbelianGroup& a, const PresentedAbelianGroup& b);

// Canonical form of the cokernel: free_rank = generators - rank(relations),
// torsion = nontrivial invariant factors in divisibility order.
FGAbelianGroup canonical_group(const PresentedAbelianGroup& p);

// Homomorphism of presented groups, given on generators.  Well-definedness
// (matrix maps the source relation lattice into the target relation lattice)
// is checked eagerly at construction via HNF membership.
class Homomorphism {
 public:
  Homomorphism(PresentedAbelianGroup source, PresentedAbelianGroup target, IntMatrix matrix);

  static Homomorphism zero(const PresentedAbelianGroup& source, const PresentedAbelianGroup& target);
  static Homomorphism identity(const PresentedAbelianGroup& g);

  const PresentedAbelianGroup& source() const { return source_; }
  const PresentedAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  // True if the map is zero as a map of presented groups (every generator
  // image lies in the target relation lattice).
  bool is_zero_map() const;

 private:
  PresentedAbelianGroup source_, target_;
  IntMatrix matrix_;
};

Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g after f

// Lattice { x in Z^g : matrix * x lies in the column lattice of relations },
// returned as a generating set (one column per generator).
IntMatrix preimage_lattice(const IntMatrix& matrix, const IntMatrix& target_relations);

// ker(g) / im(f) in canonical form.  Requires f.target == g.source and
// g o f == 0 as a map of presented groups; the result is trivial iff the
// sequence is exact at the middle spot.
FGAbelianGroup homology_at(const Homomorphism& f, const Homomorphism& g);

struct ExactnessReport {
  std::vector<FGAbelianGroup> homology;  // one group per interior spot
  bool exact = true;
};
// Consecutive maps must compose to zero; the report lists homology at every
// interior spot (target of map i = source of map i+1).
ExactnessReport is_exact(const std::vector<Homomorphism>& seq);

// Endomorphism checks used by the operator calculus.
bool is_automorphism(const Homomorphism& h);

}  // namespace kdecomp
