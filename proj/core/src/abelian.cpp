#include "kdecomp/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kdecomp {

// ---------------------------------------------------------------------------
// FGAbelianGroup

FGAbelianGroup FGAbelianGroup::free_of_rank(Int r) {
  if (r < 0) throw DomainError("free rank must be nonnegative");
  FGAbelianGroup g;
  g.free_rank = r;
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(Int d) {
  if (d < 1) throw DomainError("cyclic order must be >= 1");
  FGAbelianGroup g;
  if (d >= 2) g.torsion.push_back(d);
  return g;
}

void FGAbelianGroup::validate() const {
  if (free_rank < 0) throw DomainError("negative free rank");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw DomainError("invariant factor < 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw DomainError("invariant factors violate divisibility chain");
  }
}

std::vector<std::pair<Int, Int>> factorize(Int n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      Int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// Multiset of prime powers p^e (as pairs) of a torsion list.
std::map<std::pair<Int, Int>, Int> primary_decomposition(const std::vector<Int>& torsion) {
  std::map<std::pair<Int, Int>, Int> counts;
  for (Int d : torsion)
    for (auto [p, e] : factorize(d)) counts[{p, e}] += 1;
  return counts;
}

// Reassemble invariant factors from a prime-power multiset: the largest
// factor collects the largest power of each prime, and so on down.
std::vector<Int> invariant_factors_from_primary(std::map<std::pair<Int, Int>, Int> counts) {
  std::map<Int, std::vector<Int>> powers;  // prime -> exponents, descending
  for (auto& [pe, c] : counts) {
    for (Int i = 0; i < c; ++i) powers[pe.first].push_back(pe.second);
  }
  std::size_t slots = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<Int>());
    slots = std::max(slots, es.size());
  }
  std::vector<Int> factors(slots, 1);
  for (auto& [p, es] : powers) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int pe = 1;
      for (Int k = 0; k < es[i]; ++k) pe = checked_mul(pe, p);
      factors[i] = checked_mul(factors[i], pe);
    }
  }
  // factors is now descending; report ascending with the chain property.
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

FGAbelianGroup FGAbelianGroup::from_cyclic_decomposition(Int rank, const std::vector<Int>& moduli) {
  std::vector<Int> torsion;
  for (Int m : moduli) {
    if (m < 1) throw DomainError("cyclic modulus must be >= 1");
    if (m >= 2) torsion.push_back(m);
  }
  FGAbelianGroup g;
  g.free_rank = rank;
  g.torsion = invariant_factors_from_primary(primary_decomposition(torsion));
  g.validate();
  return g;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (Int d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Int> moduli = a.torsion;
  moduli.insert(moduli.end(), b.torsion.begin(), b.torsion.end());
  return FGAbelianGroup::from_cyclic_decomposition(a.free_rank + b.free_rank, moduli);
}

FGAbelianGroup halve_group(const FGAbelianGroup& g) {
  g.validate();
  if (g.free_rank % 2 != 0)
    throw DomainError("not halvable: free rank " + std::to_string(g.free_rank) + " is odd");
  auto counts = primary_decomposition(g.torsion);
  std::map<std::pair<Int, Int>, Int> half;
  for (auto& [pe, c] : counts) {
    if (c % 2 != 0)
      throw DomainError("not halvable: prime power " + std::to_string(pe.first) + "^" +
                        std::to_string(pe.second) + " has odd multiplicity " + std::to_string(c));
    half[pe] = c / 2;
  }
  FGAbelianGroup out;
  out.free_rank = g.free_rank / 2;
  out.torsion = invariant_factors_from_primary(half);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

std::vector<Int> SnfResult::nonzero_diagonal() const {
  std::vector<Int> out;
  for (Int x : diagonal())
    if (x != 0) out.push_back(x);
  return out;
}

namespace {

struct SnfWork {
  IntMatrix d, u, v, u_inv, v_inv;

  // Row operations on d, compensated on u/u_inv so that a = u*d*v stays true.
  void row_swap(std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_cols(i, j);
    u_inv.swap_rows(i, j);
  }
  void row_add(std::size_t dst, std::size_t src, Int f) {
    d.add_row_multiple(dst, src, f);
    u.add_col_multiple(src, dst, checked_neg(f));
    u_inv.add_row_multiple(dst, src, f);
  }
  void row_negate(std::size_t i) {
    d.negate_row(i);
    u.negate_col(i);
    u_inv.negate_row(i);
  }
  void col_swap(std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_rows(i, j);
    v_inv.swap_cols(i, j);
  }
  void col_add(std::size_t dst, std::size_t src, Int f) {
    d.add_col_multiple(dst, src, f);
    v.add_row_multiple(src, dst, checked_neg(f));
    v_inv.add_col_multiple(dst, src, f);
  }
  void col_negate(std::size_t i) {
    d.negate_col(i);
    v.negate_row(i);
    v_inv.negate_col(i);
  }
};

bool find_smallest_pivot(const IntMatrix& d, std::size_t s, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = s; i < d.rows(); ++i)
    for (std::size_t j = s; j < d.cols(); ++j) {
      Int a = d(i, j);
      if (a == 0) continue;
      if (a < 0) a = -a;
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
            IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pr = s, pc = s;
    if (!find_smallest_pivot(w.d, s, pr, pc)) break;  // lower-right block is zero
    w.row_swap(s, pr);
    w.col_swap(s, pc);
    for (;;) {
      // Clear column s below the pivot, then row s right of it.  Remainders
      // shrink the pivot, so this terminates.
      bool dirty = false;
      for (std::size_t i = s + 1; i < w.d.rows(); ++i) {
        if (w.d(i, s) == 0) continue;
        Int q = w.d(i, s) / w.d(s, s);
        w.row_add(i, s, checked_neg(q));
        if (w.d(i, s) != 0) dirty = true;
      }
      for (std::size_t j = s + 1; j < w.d.cols(); ++j) {
        if (w.d(s, j) == 0) continue;
        Int q = w.d(s, j) / w.d(s, s);
        w.col_add(j, s, checked_neg(q));
        if (w.d(s, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t pr2 = s, pc2 = s;
        find_smallest_pivot(w.d, s, pr2, pc2);
        w.row_swap(s, pr2);
        w.col_swap(s, pc2);
        continue;
      }
      // Pivot divides everything in its row/column; enforce divisibility into
      // the remaining block.
      bool fixed = true;
      for (std::size_t i = s + 1; i < w.d.rows() && fixed; ++i)
        for (std::size_t j = s + 1; j < w.d.cols() && fixed; ++j)
          if (w.d(i, j) % w.d(s, s) != 0) {
            w.row_add(s, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d(s, s) < 0) w.row_negate(s);
  }
  return SnfResult{w.u, w.d, w.v, w.u_inv, w.v_inv};
}

// ---------------------------------------------------------------------------
// Hermite normal form (column style)

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix v = IntMatrix::identity(a.cols());
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    // Euclid across columns c.. until only one nonzero entry remains in row r.
    for (;;) {
      std::size_t best = c;
      bool found = false;
      Int bestabs = 0;
      for (std::size_t j = c; j < h.cols(); ++j) {
        Int x = h(r, j);
        if (x == 0) continue;
        if (x < 0) x = -x;
        if (!found || x < bestabs) {
          found = true;
          bestabs = x;
          best = j;
        }
      }
      if (!found) break;  // row r has no pivot
      h.swap_cols(c, best);
      v.swap_cols(c, best);
      bool clean = true;
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        Int q = h(r, j) / h(r, c);
        h.add_col_multiple(j, c, checked_neg(q));
        v.add_col_multiple(j, c, checked_neg(q));
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this row
    if (h(r, c) < 0) {
      h.negate_col(c);
      v.negate_col(c);
    }
    // Reduce earlier columns at this row into [0, pivot).
    for (std::size_t j = 0; j < c; ++j) {
      Int x = h(r, j);
      Int p = h(r, c);
      Int q = x / p;
      if (x - q * p < 0) q -= 1;  // floor division
      if (q != 0) {
        h.add_col_multiple(j, c, checked_neg(q));
        v.add_col_multiple(j, c, checked_neg(q));
      }
    }
    pivots.emplace_back(r, c);
    ++c;
  }

  // Keep the transform small.  Columns of v over zero columns of h span the
  // kernel; replacing them by the Hermite basis of that sublattice and
  // size-reducing the pivot columns against it changes nothing about h but
  // tames the coefficient growth of the elimination.
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = c; j < h.cols(); ++j) zero_cols.push_back(j);
  if (!zero_cols.empty() && v.rows() > 0) {
    HnfResult kernel_form = hnf(v.submatrix_cols(zero_cols));
    for (std::size_t j = 0; j < zero_cols.size(); ++j)
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, zero_cols[j]) = kernel_form.h(i, j);
    for (std::size_t pc = 0; pc < c; ++pc) {
      for (auto [kr, kc] : kernel_form.pivots) {
        Int p = kernel_form.h(kr, kc);
        Int x = v(kr, pc);
        Int q = x >= 0 ? (x + p / 2) / p : -((-x + p / 2) / p);  // nearest multiple
        if (q != 0)
          for (std::size_t i = 0; i < v.rows(); ++i)
            v(i, pc) = checked_sub(v(i, pc), checked_mul(q, kernel_form.h(i, kc)));
      }
    }
  }
  return HnfResult{h, v, pivots};
}

bool column_lattice_contains(const IntMatrix& generators, const std::vector<Int>& v) {
  return solve_in_column_lattice(generators, v).has_value();
}

std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& generators,
                                                        const std::vector<Int>& v) {
  if (v.size() != generators.rows()) throw ShapeError("vector length does not match rows");
  HnfResult res = hnf(generators);
  std::vector<Int> b = v;
  std::vector<Int> z(generators.cols(), 0);
  for (auto [r, c] : res.pivots) {
    Int p = res.h(r, c);
    if (b[r] % p != 0) return std::nullopt;
    Int q = b[r] / p;
    z[c] = q;
    if (q != 0)
      for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = checked_sub(b[i], checked_mul(q, res.h(i, c)));
  }
  for (Int x : b)
    if (x != 0) return std::nullopt;
  // h = generators * v_transform, so generators * (v_transform * z) = h * z = v.
  return res.v.apply(z);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HnfResult res = hnf(a);
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < res.h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < res.h.rows(); ++i)
      if (res.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_cols.push_back(j);
  }
  return res.v.submatrix_cols(zero_cols);
}

IntMatrix column_lattice_basis(const IntMatrix& generators) {
  HnfResult res = hnf(generators);
  std::vector<std::size_t> nonzero;
  for (auto [r, c] : res.pivots) nonzero.push_back(c);
  return res.h.submatrix_cols(nonzero);
}

// ---------------------------------------------------------------------------
// Presented groups

PresentedAbelianGroup PresentedAbelianGroup::from_group(const FGAbelianGroup& g) {
  g.validate();
  std::size_t gens = static_cast<std::size_t>(g.free_rank) + g.torsion.size();
  IntMatrix rel(gens, g.torsion.size());
  for (std::size_t j = 0; j < g.torsion.size(); ++j)
    rel(static_cast<std::size_t>(g.free_rank) + j, j) = g.torsion[j];
  return {gens, rel};
}

void PresentedAbelianGroup::validate() const {
  if (relations.rows() != generators)
    throw ShapeError("relation matrix must have one row per generator");
}

PresentedAbelianGroup direct_sum(const PresentedAbelianGroup& a, const PresentedAbelianGroup& b) {
  a.validate();
  b.validate();
  IntMatrix rel(a.generators + b.generators, a.relations.cols() + b.relations.cols());
  rel.paste(a.relations, 0, 0);
  rel.paste(b.relations, a.generators, a.relations.cols());
  return {a.generators + b.generators, rel};
}

FGAbelianGroup canonical_group(const PresentedAbelianGroup& p) {
  p.validate();
  SnfResult res = snf(p.relations);
  FGAbelianGroup g;
  std::vector<Int> nonzero = res.nonzero_diagonal();
  g.free_rank = static_cast<Int>(p.generators) - static_cast<Int>(nonzero.size());
  for (Int d : nonzero)
    if (d >= 2) g.torsion.push_back(d);
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Homomorphisms

Homomorphism::Homomorphism(PresentedAbelianGroup source, PresentedAbelianGroup target,
                           IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  source_.validate();
  target_.validate();
  if (matrix_.rows() != target_.generators || matrix_.cols() != source_.generators)
    throw ShapeError("homomorphism matrix must be target-generators x source-generators");
  // Well-definedness: the image of every source relation must lie in the
  // target relation lattice.
  IntMatrix mapped = matrix_.multiply(source_.relations);
  for (std::size_t j = 0; j < mapped.cols(); ++j)
    if (!column_lattice_contains(target_.relations, mapped.column(j)))
      throw DomainError("homomorphism is not well defined: relation image " +
                        std::to_string(j) + " escapes the target relation lattice");
}

Homomorphism Homomorphism::zero(const PresentedAbelianGroup& source,
                                const PresentedAbelianGroup& target) {
  return Homomorphism(source, target, IntMatrix(target.generators, source.generators));
}

Homomorphism Homomorphism::identity(const PresentedAbelianGroup& g) {
  return Homomorphism(g, g, IntMatrix::identity(g.generators));
}

bool Homomorphism::is_zero_map() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    if (!column_lattice_contains(target_.relations, matrix_.column(j))) return false;
  return true;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: target/source mismatch");
  return Homomorphism(f.source(), g.target(), g.matrix().multiply(f.matrix()));
}

IntMatrix preimage_lattice(const IntMatrix& matrix, const IntMatrix& target_relations) {
  if (target_relations.rows() != matrix.rows())
    throw ShapeError("preimage_lattice: relation rows must match matrix rows");
  // x is in the lattice iff matrix*x = target_relations*y for some y, i.e.
  // (x, -y) lies in the kernel of [matrix | target_relations].
  IntMatrix stacked = matrix.hcat(target_relations);
  IntMatrix ker = kernel_basis(stacked);
  IntMatrix out(matrix.cols(), ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < matrix.cols(); ++i) out(i, j) = ker(i, j);
  return out;
}

namespace {

// Canonical form of L / S for lattices S <= L <= Z^g, both given by
// generating columns.
FGAbelianGroup lattice_subquotient(const IntMatrix& sub_generators, const IntMatrix& generators) {
  IntMatrix basis = column_lattice_basis(generators);
  IntMatrix coords(basis.cols(), sub_generators.cols());
  for (std::size_t j = 0; j < sub_generators.cols(); ++j) {
    auto z = solve_in_column_lattice(basis, sub_generators.column(j));
    if (!z) throw DomainError("internal: subgroup generator not inside ambient lattice");
    for (std::size_t i = 0; i < basis.cols(); ++i) coords(i, j) = (*z)[i];
  }
  return canonical_group({basis.cols(), coords});
}

}  // namespace

FGAbelianGroup homology_at(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.target() == g.source())) throw ShapeError("homology_at: f.target must equal g.source");
  if (!compose(g, f).is_zero_map())
    throw DomainError("homology_at: composite g o f is not zero as a map of presented groups");
  const PresentedAbelianGroup& mid = f.target();
  // ker(g) as a sublattice of Z^mid (it contains the relation lattice because
  // g is well defined), then quotient by relations + im(f).
  IntMatrix kernel_gens = preimage_lattice(g.matrix(), g.target().relations).hcat(mid.relations);
  IntMatrix image_gens = f.matrix().hcat(mid.relations);
  return lattice_subquotient(image_gens, kernel_gens);
}

ExactnessReport is_exact(const std::vector<Homomorphism>& seq) {
  ExactnessReport report;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    FGAbelianGroup h = homology_at(seq[i], seq[i + 1]);
    report.exact = report.exact && h.is_trivial();
    report.homology.push_back(std::move(h));
  }
  return report;
}

bool is_automorphism(const Homomorphism& h) {
  if (!(h.source() == h.target())) return false;
  const PresentedAbelianGroup& g = h.source();
  // Surjective: the images of the generators together with the relations
  // span everything.
  if (!canonical_group({g.generators, h.matrix().hcat(g.relations)}).is_trivial()) return false;
  // Injective: the kernel (preimage of the relation lattice, modulo
  // relations) is trivial.
  IntMatrix ker_gens = preimage_lattice(h.matrix(), g.relations).hcat(g.relations);
  return lattice_subquotient(g.relations, ker_gens).is_trivial();
}

}  // namespace kdecomp
