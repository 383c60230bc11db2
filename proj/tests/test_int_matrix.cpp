#include <limits>

#include "doctest.h"
#include "kdecomp/int_matrix.hpp"
#include "oracles.hpp"

using namespace kdecomp;
using namespace kdecomp::testing;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), OverflowError);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), OverflowError);
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
}

TEST_CASE("matrix product overflow is detected") {
  Int big = Int{1} << 62;
  IntMatrix a(1, 1, {big});
  IntMatrix b(1, 1, {4});
  CHECK_THROWS_AS(a.multiply(b), OverflowError);
}

TEST_CASE("ext_gcd Bezout identity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> dist(-500, 500);
  for (int iter = 0; iter < 200; ++iter) {
    Int a = dist(rng), b = dist(rng);
    ExtGcd e = ext_gcd(a, b);
    CHECK(e.g == gcd_int(a, b));
    CHECK(a * e.x + b * e.y == e.g);
  }
  CHECK(ext_gcd(0, 0).g == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 80; ++iter) {
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    std::size_t n = dims(rng);
    IntMatrix m = random_matrix(rng, n, n, 6);
    CHECK(m.determinant() == naive_determinant(m));
  }
  CHECK(IntMatrix(0, 0).determinant() == 1);
  CHECK(IntMatrix::identity(4).determinant() == 1);
}

TEST_CASE("binomial matches Pascal recursion") {
  for (Int n = 0; n <= 12; ++n)
    for (Int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == pascal_binomial(n, k));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(IntMatrix(2, 2, {1, 2, 3}), ShapeError);
  CHECK_THROWS_AS(IntMatrix(2, 3).multiply(IntMatrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(IntMatrix(2, 3).determinant(), ShapeError);
}
