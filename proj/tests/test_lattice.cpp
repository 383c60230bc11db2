#include <map>
#include <set>

#include "doctest.h"
#include "kdecomp/lattice.hpp"
#include "oracles.hpp"

using namespace kdecomp;

namespace {

std::vector<Int> coords(std::initializer_list<Int> v) { return std::vector<Int>(v); }

}  // namespace

TEST_CASE("canonical_primitive worked examples") {
  CHECK(canonical_primitive(coords({-2, 4})).coords() == coords({1, -2}));
  CHECK(canonical_primitive(coords({1, 0, 0})).coords() == coords({1, 0, 0}));
  CHECK(gcd_int(gcd_int(6, 10), 15) == 1);
  CHECK(canonical_primitive(coords({6, 10, 15})).coords() == coords({6, 10, 15}));
  CHECK_THROWS_AS(canonical_primitive(coords({0, 0})), DomainError);
  CHECK_THROWS_AS(PrimitiveVector(coords({2, 4})), DomainError);
  CHECK_THROWS_AS(PrimitiveVector(coords({-1, 2})), DomainError);
}

TEST_CASE("canonical_primitive collapses scalar multiples") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<Int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = dims(rng);
    std::vector<Int> v(n);
    bool zero = true;
    for (auto& x : v) {
      x = coeff(rng);
      if (x != 0) zero = false;
    }
    if (zero) continue;
    PrimitiveVector base = canonical_primitive(v);
    for (Int k : {-3, -1, 2, 5}) {
      std::vector<Int> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = k * v[i];
      CHECK(canonical_primitive(scaled) == base);
    }
  }
}

TEST_CASE("enumerate_subgroups worked examples") {
  // Exhaustive scan of the height-1 square, canonicalized and deduped.
  auto all21 = enumerate_subgroups(2, 1, SubgroupFilter::all);
  std::set<std::vector<Int>> expected{{0, 1}, {1, -1}, {1, 0}, {1, 1}};
  std::set<std::vector<Int>> got;
  for (auto& p : all21) got.insert(p.coords());
  CHECK(got == expected);
  // Lexicographic order.
  REQUIRE(all21.size() == 4);
  CHECK(all21[0].coords() == coords({0, 1}));
  CHECK(all21[1].coords() == coords({1, -1}));
  CHECK(all21[2].coords() == coords({1, 0}));
  CHECK(all21[3].coords() == coords({1, 1}));

  // Z has a single maximal cyclic subgroup.
  auto one = enumerate_subgroups(1, 5, SubgroupFilter::all);
  REQUIRE(one.size() == 1);
  CHECK(one[0].coords() == coords({1}));

  // (2,2) is not primitive.
  auto pos22 = enumerate_subgroups(2, 2, SubgroupFilter::positive);
  REQUIRE(pos22.size() == 3);
  CHECK(pos22[0].coords() == coords({1, 1}));
  CHECK(pos22[1].coords() == coords({1, 2}));
  CHECK(pos22[2].coords() == coords({2, 1}));
}

TEST_CASE("filters are nested") {
  for (Int n : {2, 3}) {
    for (Int h : {1, 2, 3}) {
      auto all = enumerate_subgroups(n, h, SubgroupFilter::all);
      auto nonzero = enumerate_subgroups(n, h, SubgroupFilter::nonzero);
      auto positive = enumerate_subgroups(n, h, SubgroupFilter::positive);
      std::set<PrimitiveVector> all_set(all.begin(), all.end());
      std::set<PrimitiveVector> nonzero_set(nonzero.begin(), nonzero.end());
      for (auto& p : nonzero) CHECK(all_set.count(p) == 1);
      for (auto& p : positive) CHECK(nonzero_set.count(p) == 1);
      for (auto& p : nonzero) CHECK(nonzero_set.count(fold_to_positive(p)) == 1);
    }
  }
}

TEST_CASE("fold_to_positive worked examples") {
  CHECK(fold_to_positive(PrimitiveVector(coords({1, -2}))).coords() == coords({1, 2}));
  CHECK(fold_to_positive(PrimitiveVector(coords({1, 1, 1}))).coords() == coords({1, 1, 1}));
  CHECK_THROWS_AS(fold_to_positive(PrimitiveVector(coords({1, 0}))), DomainError);

  // Fiber of the fold over (1,2) at n=2: the two sign patterns.
  std::map<PrimitiveVector, std::set<PrimitiveVector>> fibers;
  for (auto& p : enumerate_subgroups(2, 2, SubgroupFilter::nonzero))
    fibers[fold_to_positive(p)].insert(p);
  PrimitiveVector key(coords({1, 2}));
  REQUIRE(fibers.count(key) == 1);
  CHECK(fibers[key] ==
        std::set<PrimitiveVector>{PrimitiveVector(coords({1, -2})), PrimitiveVector(coords({1, 2}))});
}

TEST_CASE("every fold fiber has size 2^(n-1)") {
  for (Int n : {2, 3}) {
    Int expected = n == 2 ? 2 : 4;
    for (Int h = 1; h <= 5; ++h) {
      std::map<PrimitiveVector, Int> fiber_size;
      for (auto& p : enumerate_subgroups(n, h, SubgroupFilter::nonzero))
        fiber_size[fold_to_positive(p)] += 1;
      auto positive = enumerate_subgroups(n, h, SubgroupFilter::positive);
      CHECK(fiber_size.size() == positive.size());
      for (auto& [key, size] : fiber_size) {
        CHECK(key.all_positive());
        CHECK(size == expected);
      }
    }
  }
}

TEST_CASE("complete_to_basis worked examples") {
  // Extended gcd: 2*2 - 3*1 = 1.
  IntMatrix m23 = complete_to_basis(PrimitiveVector(coords({2, 3}))).matrix();
  CHECK(m23 == IntMatrix(2, 2, {2, 1, 3, 2}));
  CHECK(m23.determinant() == 1);

  CHECK(complete_to_basis(PrimitiveVector(coords({1, 0, 0}))).matrix() ==
        IntMatrix::identity(3));

  IntMatrix m345 = complete_to_basis(PrimitiveVector(coords({3, 4, 5}))).matrix();
  CHECK((m345.determinant() == 1 || m345.determinant() == -1));
  CHECK(m345.column(0) == coords({3, 4, 5}));

  // Deterministic.
  CHECK(complete_to_basis(PrimitiveVector(coords({3, 4, 5}))).matrix() == m345);
}

TEST_CASE("complete_to_basis exhaustive over small primitive vectors") {
  for (Int n : {1, 2, 3}) {
    std::set<std::vector<Int>> seen;
    std::vector<Int> v(static_cast<std::size_t>(n), -4);
    for (;;) {
      bool zero = true;
      for (Int x : v)
        if (x != 0) zero = false;
      if (!zero) seen.insert(PrimitiveVector::canonical(v).coords());
      std::size_t i = 0;
      for (; i < v.size(); ++i) {
        if (v[i] < 4) {
          ++v[i];
          break;
        }
        v[i] = -4;
      }
      if (i == v.size()) break;
    }
    for (auto& c : seen) {
      PrimitiveVector p(c);
      IntMatrix basis = complete_to_basis(p).matrix();
      CHECK(basis.column(0) == c);
      Int det = basis.determinant();
      CHECK((det == 1 || det == -1));
    }
  }
}

TEST_CASE("unimodular wrapper validates") {
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix(2, 2, {2, 0, 0, 1})), DomainError);
  CHECK_NOTHROW(UnimodularMatrix(IntMatrix::identity(4)));
}
