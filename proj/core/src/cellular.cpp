#include "kdecomp/cellular.hpp"

#include <string>

namespace kdecomp {

Int ChainComplex::rank(Int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return ranks[static_cast<std::size_t>(degree)];
}

IntMatrix ChainComplex::boundary(Int i) const {
  if (i < 1 || i > top_degree())
    return IntMatrix(static_cast<std::size_t>(rank(i - 1)), static_cast<std::size_t>(rank(i)));
  return boundaries[static_cast<std::size_t>(i) - 1];
}

void ChainComplex::validate() const {
  if (ranks.empty()) throw ShapeError("chain complex needs at least degree 0");
  for (Int r : ranks)
    if (r < 0) throw ShapeError("negative rank");
  if (boundaries.size() + 1 != ranks.size())
    throw ShapeError("need exactly one boundary map per positive degree");
  for (Int i = 1; i <= top_degree(); ++i) {
    const IntMatrix& d = boundary(i);
    if (d.rows() != static_cast<std::size_t>(rank(i - 1)) ||
        d.cols() != static_cast<std::size_t>(rank(i)))
      throw ShapeError("boundary " + std::to_string(i) + " has the wrong shape");
  }
  for (Int i = 2; i <= top_degree(); ++i)
    if (!boundary(i - 1).multiply(boundary(i)).is_zero())
      throw ShapeError("d o d != 0 between degrees " + std::to_string(i) + " and " +
                       std::to_string(i - 2));
}

ChainComplex point_complex() { return ChainComplex{{1}, {}}; }

ChainComplex circle_complex() { return ChainComplex{{1, 1}, {IntMatrix(1, 1)}}; }

ChainComplex interval_complex() {
  IntMatrix d(2, 1);
  d(0, 0) = -1;
  d(1, 0) = 1;
  return ChainComplex{{2, 1}, {d}};
}

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
  a.validate();
  b.validate();
  Int top = a.top_degree() + b.top_degree();
  ChainComplex out;

  // Offsets of the (i, j)-block (i + j = n) inside (A (x) B)_n, blocks
  // ordered by ascending i.
  auto block_offset = [&](Int n, Int i) {
    Int off = 0;
    for (Int k = 0; k < i; ++k) off += a.rank(k) * b.rank(n - k);
    return off;
  };

  for (Int n = 0; n <= top; ++n) {
    Int r = 0;
    for (Int i = 0; i <= n; ++i) r += a.rank(i) * b.rank(n - i);
    out.ranks.push_back(r);
  }
  for (Int n = 1; n <= top; ++n) {
    IntMatrix d(static_cast<std::size_t>(out.ranks[n - 1]), static_cast<std::size_t>(out.ranks[n]));
    for (Int i = 0; i <= n; ++i) {
      Int j = n - i;
      if (a.rank(i) == 0 || b.rank(j) == 0) continue;
      Int src = block_offset(n, i);
      // d_A (x) id lands in block (i-1, j).
      if (i >= 1 && a.rank(i - 1) > 0) {
        Int dst = block_offset(n - 1, i - 1);
        const IntMatrix& da = a.boundary(i);
        for (Int p = 0; p < a.rank(i - 1); ++p)
          for (Int c = 0; c < a.rank(i); ++c) {
            Int val = da(static_cast<std::size_t>(p), static_cast<std::size_t>(c));
            if (val == 0) continue;
            for (Int t = 0; t < b.rank(j); ++t)
              d(static_cast<std::size_t>(dst + p * b.rank(j) + t),
                static_cast<std::size_t>(src + c * b.rank(j) + t)) = val;
          }
      }
      // (-1)^i id (x) d_B lands in block (i, j-1).
      if (j >= 1 && b.rank(j - 1) > 0) {
        Int dst = block_offset(n - 1, i);
        const IntMatrix& db = b.boundary(j);
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (Int p = 0; p < b.rank(j - 1); ++p)
          for (Int c = 0; c < b.rank(j); ++c) {
            Int val = db(static_cast<std::size_t>(p), static_cast<std::size_t>(c));
            if (val == 0) continue;
            for (Int t = 0; t < a.rank(i); ++t)
              d(static_cast<std::size_t>(dst + t * b.rank(j - 1) + p),
                static_cast<std::size_t>(src + t * b.rank(j) + c)) = checked_mul(sign, val);
          }
      }
    }
    out.boundaries.push_back(std::move(d));
  }
  out.validate();
  return out;
}

ChainComplex torus_complex(Int k) {
  if (k < 0) throw DomainError("torus dimension must be >= 0");
  ChainComplex c = point_complex();
  for (Int i = 0; i < k; ++i) c = tensor_product(c, circle_complex());
  return c;
}

std::vector<FGAbelianGroup> integral_homology(const ChainComplex& c) {
  c.validate();
  std::vector<FGAbelianGroup> out;
  for (Int i = 0; i <= c.top_degree(); ++i) {
    IntMatrix ker = kernel_basis(c.boundary(i));  // inside C_i
    IntMatrix img = c.boundary(i + 1);
    IntMatrix coords(ker.cols(), img.cols());
    for (std::size_t j = 0; j < img.cols(); ++j) {
      auto z = solve_in_column_lattice(ker, img.column(j));
      if (!z) throw DomainError("internal: image does not lie in the kernel");
      for (std::size_t r = 0; r < ker.cols(); ++r) coords(r, j) = (*z)[r];
    }
    out.push_back(canonical_group({ker.cols(), coords}));
  }
  return out;
}

CoefficientModule CoefficientModule::with_involution(PresentedAbelianGroup g,
                                                     IntMatrix involution_matrix) {
  Homomorphism tau(g, g, std::move(involution_matrix));
  IntMatrix square = compose(tau, tau).matrix().subtract(IntMatrix::identity(g.generators));
  for (std::size_t j = 0; j < square.cols(); ++j)
    if (!column_lattice_contains(g.relations, square.column(j)))
      throw DomainError("involution squared is not the identity on the group");
  return {std::move(g), std::move(tau)};
}

std::vector<FGAbelianGroup> homology_with_coefficients(const ChainComplex& c,
                                                       const CoefficientModule& m) {
  c.validate();
  m.group.validate();
  std::size_t g = m.group.generators;

  // Degreewise group M^{rank} with blockwise boundary d (x) id_M.
  auto chain_group = [&](Int degree) {
    PresentedAbelianGroup p = PresentedAbelianGroup::trivial();
    for (Int i = 0; i < c.rank(degree); ++i) p = direct_sum(p, m.group);
    return p;
  };
  auto induced = [&](Int i, const PresentedAbelianGroup& src, const PresentedAbelianGroup& dst) {
    IntMatrix d = c.boundary(i);
    IntMatrix big(dst.generators, src.generators);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col) {
        Int v = d(r, col);
        if (v == 0) continue;
        for (std::size_t t = 0; t < g; ++t) big(r * g + t, col * g + t) = v;
      }
    return Homomorphism(src, dst, big);
  };

  std::vector<PresentedAbelianGroup> groups;
  for (Int i = 0; i <= c.top_degree(); ++i) groups.push_back(chain_group(i));

  std::vector<FGAbelianGroup> out;
  for (Int i = 0; i <= c.top_degree(); ++i) {
    Homomorphism below =
        i + 1 <= c.top_degree()
            ? induced(i + 1, groups[i + 1], groups[i])
            : Homomorphism::zero(PresentedAbelianGroup::trivial(), groups[i]);
    Homomorphism above = i >= 1 ? induced(i, groups[i], groups[i - 1])
                                : Homomorphism::zero(groups[i], PresentedAbelianGroup::trivial());
    out.push_back(homology_at(below, above));
  }
  return out;
}

ChainMap ChainMap::identity(const ChainComplex& c) { return scalar(c, 1); }

ChainMap ChainMap::scalar(const ChainComplex& c, Int s) {
  ChainMap f;
  for (Int i = 0; i <= c.top_degree(); ++i) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(c.rank(i)));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, r) = s;
    f.maps.push_back(std::move(m));
  }
  return f;
}

std::vector<FGAbelianGroup> mapping_torus_homology(const ChainComplex& c, const ChainMap& f) {
  c.validate();
  if (f.maps.size() != c.ranks.size())
    throw ShapeError("chain map must be given in every degree");
  for (Int i = 0; i <= c.top_degree(); ++i) {
    const IntMatrix& fi = f.maps[static_cast<std::size_t>(i)];
    if (fi.rows() != static_cast<std::size_t>(c.rank(i)) || !fi.is_square())
      throw ShapeError("chain map degree " + std::to_string(i) + " has the wrong shape");
  }
  for (Int i = 1; i <= c.top_degree(); ++i) {
    IntMatrix lhs = f.maps[static_cast<std::size_t>(i - 1)].multiply(c.boundary(i));
    IntMatrix rhs = c.boundary(i).multiply(f.maps[static_cast<std::size_t>(i)]);
    if (!(lhs == rhs))
      throw DomainError("not a chain map: boundary does not commute at degree " +
                        std::to_string(i));
  }

  // Mapping cone of (1 - f): T_n = C_{n-1} + C_n with
  // d(a, b) = (-d a, (1-f) a + d b).
  auto one_minus = [&](Int i) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(c.rank(i)));
    return m.subtract(f.maps[static_cast<std::size_t>(i)]);
  };

  ChainComplex torus;
  for (Int n = 0; n <= c.top_degree() + 1; ++n) torus.ranks.push_back(c.rank(n - 1) + c.rank(n));
  for (Int n = 1; n <= c.top_degree() + 1; ++n) {
    std::size_t shift_src = static_cast<std::size_t>(c.rank(n - 1));
    std::size_t shift_dst = static_cast<std::size_t>(c.rank(n - 2));
    IntMatrix d(static_cast<std::size_t>(torus.ranks[n - 1]), static_cast<std::size_t>(torus.ranks[n]));
    if (n - 1 >= 1) d.paste(c.boundary(n - 1).negated(), 0, 0);
    d.paste(one_minus(n - 1), shift_dst, 0);
    if (n <= c.top_degree()) d.paste(c.boundary(n), shift_dst, shift_src);
    torus.boundaries.push_back(std::move(d));
  }
  return integral_homology(torus);
}

std::vector<FGAbelianGroup> z2_homology(const CoefficientModule& m, Int top_degree) {
  if (top_degree < 0) throw DomainError("z2_homology requires top_degree >= 0");
  if (!m.involution) throw DomainError("z2_homology requires an involution");
  const Homomorphism& tau = *m.involution;
  if (!(tau.source() == m.group) || !(tau.target() == m.group))
    throw DomainError("involution must be a self-map of the coefficient group");
  IntMatrix square = compose(tau, tau).matrix().subtract(IntMatrix::identity(m.group.generators));
  for (std::size_t j = 0; j < square.cols(); ++j)
    if (!column_lattice_contains(m.group.relations, square.column(j)))
      throw DomainError("involution squared is not the identity on the group");

  IntMatrix id = IntMatrix::identity(m.group.generators);
  IntMatrix one_plus = tau.matrix();
  for (std::size_t i = 0; i < one_plus.rows(); ++i)
    one_plus(i, i) = checked_add(one_plus(i, i), 1);
  Homomorphism d_odd(m.group, m.group, id.subtract(tau.matrix()));  // 1 - t
  Homomorphism d_even(m.group, m.group, one_plus);                  // 1 + t

  auto differential = [&](Int i) { return i % 2 == 1 ? d_odd : d_even; };

  std::vector<FGAbelianGroup> out;
  for (Int i = 0; i <= top_degree; ++i) {
    Homomorphism incoming = differential(i + 1);
    Homomorphism outgoing =
        i == 0 ? Homomorphism::zero(m.group, PresentedAbelianGroup::trivial()) : differential(i);
    out.push_back(homology_at(incoming, outgoing));
  }
  return out;
}

}  // namespace kdecomp
