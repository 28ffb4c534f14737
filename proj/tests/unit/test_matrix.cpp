#include <doctest.h>

#include "cmc/errors.hpp"
#include "cmc/matrix.hpp"
#include "cmc/verify.hpp"

using cmc::RMatrix;
using cmc::Rational;

TEST_CASE("indexing is 1-based and bounds-checked") {
  RMatrix a{{1, 2}, {3, 4}};
  CHECK(a.at(1, 1) == Rational(1));
  CHECK(a.at(2, 1) == Rational(3));
  CHECK_THROWS_AS(a.at(0, 1), cmc::DimensionError);
  CHECK_THROWS_AS(a.at(1, 3), cmc::DimensionError);
}

TEST_CASE("identity multiplication is neutral") {
  RMatrix i4 = RMatrix::identity(4);
  CHECK(i4 * i4 == i4);
  const RMatrix& a = cmc::golden_fixtures().a;
  CHECK(a * i4 == a);
  CHECK(i4 * a == a);
}

TEST_CASE("product matches hand-computed values") {
  RMatrix a{{1, 2}, {3, 4}};
  RMatrix swap{{0, 1}, {1, 0}};
  CHECK(a * swap == RMatrix{{2, 1}, {4, 3}});
  CHECK(swap * a == RMatrix{{3, 4}, {1, 2}});
}

TEST_CASE("the worked example annihilates its cofactor matrix") {
  const auto& g = cmc::golden_fixtures();
  CHECK((g.a * g.k12).is_zero());
}

TEST_CASE("shape mismatches throw") {
  RMatrix a(2, 3);
  RMatrix b(2, 3);
  CHECK_THROWS_AS(a * b, cmc::DimensionError);
  CHECK_THROWS_AS(a + RMatrix(3, 2), cmc::DimensionError);
  CHECK_THROWS_AS(a.order(), cmc::DimensionError);
  CHECK_THROWS_AS((RMatrix{{1, 2}, {3}}), cmc::DimensionError);
}

TEST_CASE("transpose and scaling") {
  RMatrix a{{1, 2, 3}, {4, 5, 6}};
  CHECK(a.transpose() == RMatrix{{1, 4}, {2, 5}, {3, 6}});
  CHECK(a.transpose().transpose() == a);
  CHECK(a.scaled(Rational(2)) == RMatrix{{2, 4, 6}, {8, 10, 12}});
  CHECK((-a) + a == RMatrix(2, 3));
}

TEST_CASE("hcat glues columns") {
  RMatrix u = RMatrix::column({Rational(1), Rational(2)});
  RMatrix v = RMatrix::column({Rational(3), Rational(4)});
  CHECK(cmc::hcat({u, v}) == RMatrix{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(cmc::hcat({u, RMatrix(3, 1)}), cmc::DimensionError);
}
