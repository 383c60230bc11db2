#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kdecomp::testing {

Int naive_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square only");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Int term = checked_mul(m(0, j), naive_determinant(minor));
    det = (j % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
  }
  return det;
}

Int pascal_binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Int>> row{{1}};
  for (Int i = 1; i <= n; ++i) {
    std::vector<Int> next(static_cast<std::size_t>(i) + 1, 1);
    for (Int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] = checked_add(row.back()[static_cast<std::size_t>(j - 1)],
                                                      row.back()[static_cast<std::size_t>(j)]);
    row.push_back(std::move(next));
  }
  return row.back()[static_cast<std::size_t>(k)];
}

std::vector<Int> elementary_snf_diagonal(IntMatrix m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t nmin = std::min(rows, cols);
  for (std::size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // Smallest-magnitude nonzero entry of the working block becomes the
      // pivot, so the division remainders shrink every round.
      std::size_t pr = s, pc = s;
      bool found = false;
      Int best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          Int x = m(i, j);
          if (x == 0) continue;
          if (x < 0) x = -x;
          if (!found || x < best) {
            pr = i;
            pc = j;
            best = x;
            found = true;
          }
        }
      if (!found) break;
      m.swap_rows(s, pr);
      m.swap_cols(s, pc);
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i)
        if (m(i, s) != 0) {
          m.add_row_multiple(i, s, -(m(i, s) / m(s, s)));
          if (m(i, s) != 0) clean = false;
        }
      for (std::size_t j = s + 1; j < cols; ++j)
        if (m(s, j) != 0) {
          m.add_col_multiple(j, s, -(m(s, j) / m(s, s)));
          if (m(s, j) != 0) clean = false;
        }
      if (clean) break;
    }
  }
  std::vector<Int> diag;
  for (std::size_t i = 0; i < nmin; ++i) {
    Int x = m(i, i);
    diag.push_back(x < 0 ? -x : x);
  }
  // Repair divisibility with gcd/lcm passes, zeros pushed to the end.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        Int a = diag[i], b = diag[j];
        if (a == 0 && b != 0) {
          diag[i] = b;
          diag[j] = 0;
          changed = true;
          continue;
        }
        if (a == 0 || b == 0) continue;
        Int g = std::gcd(a, b);
        Int l = a / g * b;
        if (g != a || l != b) {
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
      }
  }
  return diag;
}

namespace {

void minors_gcd(const IntMatrix& m, std::size_t k, Int& g) {
  std::vector<std::size_t> rs(k), cs(k);
  std::vector<std::size_t> row_choice(k), col_choice(k);
  // Enumerate k-subsets of rows and columns.
  std::vector<std::size_t> ridx(k);
  std::iota(ridx.begin(), ridx.end(), 0);
  auto next_subset = [](std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t k2 = idx.size();
    std::size_t i = k2;
    while (i > 0) {
      --i;
      if (idx[i] + 1 <= limit - (k2 - i)) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<std::size_t> cidx(k);
    std::iota(cidx.begin(), cidx.end(), 0);
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ridx[i], cidx[j]);
      g = std::gcd(g, naive_determinant(sub));
    } while (next_subset(cidx, m.cols()));
  } while (next_subset(ridx, m.rows()));
}

}  // namespace

std::vector<Int> determinantal_divisor_diagonal(const IntMatrix& m) {
  std::size_t nmin = std::min(m.rows(), m.cols());
  std::vector<Int> diag;
  Int prev = 1;
  for (std::size_t k = 1; k <= nmin; ++k) {
    Int g = 0;
    minors_gcd(m, k, g);
    if (g == 0) {
      // Rank reached: all remaining invariants are zero.
      while (diag.size() < nmin) diag.push_back(0);
      return diag;
    }
    diag.push_back(g / prev);
    prev = g;
  }
  return diag;
}

IntMatrix elementary_hnf(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    for (;;) {
      std::size_t j0 = c;
      bool found = false;
      Int best = 0;
      for (std::size_t j = c; j < h.cols(); ++j) {
        Int x = h(r, j);
        if (x == 0) continue;
        if (x < 0) x = -x;
        if (!found || x < best) {
          j0 = j;
          best = x;
          found = true;
        }
      }
      if (!found) break;
      h.swap_cols(c, j0);
      bool clean = true;
      for (std::size_t j = c + 1; j < h.cols(); ++j)
        if (h(r, j) != 0) {
          h.add_col_multiple(j, c, -(h(r, j) / h(r, c)));
          if (h(r, j) != 0) clean = false;
        }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_col(c);
    for (std::size_t j = 0; j < c; ++j) {
      Int q = h(r, j) / h(r, c);
      if (h(r, j) - q * h(r, c) < 0) q -= 1;
      if (q != 0) h.add_col_multiple(j, c, -q);
    }
    ++c;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Finite homology oracle

namespace {

using Tuple = std::vector<Int>;

Tuple mod_reduce(const std::vector<Int>& v, Int n) {
  Tuple out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ((v[i] % n) + n) % n;
  return out;
}

Tuple add_mod(const Tuple& a, const Tuple& b, Int n) {
  Tuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % n;
  return out;
}

Tuple scale_mod(const Tuple& a, Int k, Int n) {
  Tuple out(a.size());
  Int kk = ((k % n) + n) % n;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] * kk) % n;
  return out;
}

// Subgroup of (Z/n)^g generated by the columns, as an explicit set.
std::set<Tuple> span_mod(const IntMatrix& gens, Int n, std::size_t g) {
  std::set<Tuple> out{Tuple(g, 0)};
  std::vector<Tuple> work{Tuple(g, 0)};
  std::vector<Tuple> cols;
  for (std::size_t j = 0; j < gens.cols(); ++j) cols.push_back(mod_reduce(gens.column(j), n));
  while (!work.empty()) {
    Tuple e = work.back();
    work.pop_back();
    for (const Tuple& c : cols) {
      Tuple next = add_mod(e, c, n);
      if (out.insert(next).second) work.push_back(next);
    }
  }
  return out;
}

}  // namespace

FiniteComplex random_finite_complex(std::mt19937& rng) {
  const Int moduli[] = {4, 6, 8, 9, 12};
  std::uniform_int_distribution<int> pick_mod(0, 4);
  std::uniform_int_distribution<Int> dims(1, 3);
  FiniteComplex fc;
  fc.modulus = moduli[pick_mod(rng)];
  Int n = fc.modulus;
  std::size_t ga = static_cast<std::size_t>(dims(rng));
  std::size_t gb = static_cast<std::size_t>(dims(rng));
  std::size_t gc = static_cast<std::size_t>(dims(rng));

  fc.f = random_matrix(rng, gb, ga, 3);

  // Rows r with r * f == 0 mod n, so that g * f == 0 mod n by construction.
  std::vector<Tuple> kernel_rows;
  Tuple row(gb, 0);
  for (;;) {
    std::vector<Int> image(ga, 0);
    for (std::size_t j = 0; j < ga; ++j)
      for (std::size_t i = 0; i < gb; ++i) image[j] += row[i] * fc.f(i, j);
    if (std::all_of(image.begin(), image.end(), [&](Int x) { return x % n == 0; }))
      kernel_rows.push_back(row);
    std::size_t i = 0;
    for (; i < gb; ++i) {
      if (row[i] + 1 < n) {
        ++row[i];
        break;
      }
      row[i] = 0;
    }
    if (i == gb) break;
  }
  std::uniform_int_distribution<std::size_t> pick_row(0, kernel_rows.size() - 1);
  fc.g = IntMatrix(gc, gb);
  for (std::size_t r = 0; r < gc; ++r) {
    Tuple chosen = kernel_rows[pick_row(rng)];
    for (std::size_t cidx = 0; cidx < gb; ++cidx) {
      Int lifted = chosen[cidx] > n / 2 ? chosen[cidx] - n : chosen[cidx];  // centered lift
      fc.g(r, cidx) = lifted;
    }
  }

  auto n_identity = [n](std::size_t g) {
    IntMatrix m = IntMatrix::identity(g);
    for (std::size_t i = 0; i < g; ++i) m(i, i) = n;
    return m;
  };
  fc.rel_a = n_identity(ga);
  fc.rel_b = n_identity(gb);
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng)) {
    IntMatrix extra = random_matrix(rng, gb, 1, 2);
    fc.rel_b = fc.rel_b.hcat(extra);
    fc.rel_c = n_identity(gc).hcat(fc.g.multiply(extra));
  } else {
    fc.rel_c = n_identity(gc);
  }
  if (coin(rng)) fc.rel_c = fc.rel_c.hcat(random_matrix(rng, gc, 1, 3));
  return fc;
}

std::vector<Int> finite_homology_invariants(const FiniteComplex& fc) {
  Int n = fc.modulus;
  std::size_t gb = fc.f.rows();
  std::size_t gc = fc.g.rows();

  std::set<Tuple> span_c = span_mod(fc.rel_c, n, gc);

  // All tuples of (Z/n)^{gb} whose image lands in the relation span of C.
  std::vector<Tuple> kernel;
  Tuple x(gb, 0);
  for (;;) {
    std::vector<Int> gx(gc, 0);
    for (std::size_t r = 0; r < gc; ++r)
      for (std::size_t j = 0; j < gb; ++j) gx[r] += fc.g(r, j) * x[j];
    if (span_c.count(mod_reduce(gx, n))) kernel.push_back(x);
    std::size_t i = 0;
    for (; i < gb; ++i) {
      if (x[i] + 1 < n) {
        ++x[i];
        break;
      }
      x[i] = 0;
    }
    if (i == gb) break;
  }

  std::set<Tuple> denominator = span_mod(fc.f.hcat(fc.rel_b), n, gb);

  // Coset representatives: lexicographic minimum over x + S.
  std::set<Tuple> reps;
  for (const Tuple& k : kernel) {
    Tuple best = k;
    for (const Tuple& s : denominator) best = std::min(best, add_mod(k, s, n));
    reps.insert(best);
  }

  Int order = static_cast<Int>(reps.size());
  if (order == 1) return {};

  // N(m) = number of cosets annihilated by m.
  auto annihilated = [&](Int m) {
    Int count = 0;
    for (const Tuple& r : reps)
      if (denominator.count(scale_mod(r, m, n))) ++count;
    return count;
  };

  // Prime-power multiset from the annihilator statistics.
  std::map<Int, std::vector<Int>> exponents;  // prime -> exponent multiset
  Int rest = order;
  for (Int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<Int> geq;  // geq[k-1] = #invariants with p-exponent >= k
    Int prev_log = 0;
    for (Int pk = p;; pk *= p) {
      Int cnt = annihilated(pk);
      Int log = 0;
      for (Int c2 = cnt; c2 > 1; c2 /= p) ++log;
      geq.push_back(log - prev_log);
      prev_log = log;
      if (geq.back() == 0) break;
    }
    std::vector<Int> multiset;  // geq ends with a zero entry by construction
    for (std::size_t k = 0; k + 1 < geq.size(); ++k)
      for (Int c2 = 0; c2 < geq[k] - geq[k + 1]; ++c2) multiset.push_back(static_cast<Int>(k) + 1);
    exponents[p] = multiset;
  }

  // Merge prime powers into invariant factors (largest with largest).
  std::size_t slots = 0;
  for (auto& [p, es] : exponents) {
    std::sort(es.begin(), es.end(), std::greater<Int>());
    slots = std::max(slots, es.size());
  }
  std::vector<Int> factors(slots, 1);
  for (auto& [p, es] : exponents)
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int pe = 1;
      for (Int k = 0; k < es[i]; ++k) pe *= p;
      factors[i] *= pe;
    }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, Int bound) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

FGAbelianGroup random_group(std::mt19937& rng, Int max_rank, Int max_exponent) {
  std::uniform_int_distribution<Int> rank(0, max_rank);
  std::uniform_int_distribution<Int> d1(2, max_exponent);
  std::uniform_int_distribution<int> shape(0, 2);
  FGAbelianGroup g;
  g.free_rank = rank(rng);
  int s = shape(rng);
  if (s >= 1) {
    Int a = d1(rng);
    g.torsion.push_back(a);
    if (s == 2) {
      std::vector<Int> multiples;
      for (Int m = a; m <= max_exponent; m += a) multiples.push_back(m);
      std::uniform_int_distribution<std::size_t> pick(0, multiples.size() - 1);
      g.torsion.push_back(multiples[pick(rng)]);
    }
  }
  g.validate();
  return g;
}

}  // namespace kdecomp::testing
