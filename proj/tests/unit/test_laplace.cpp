#include <doctest.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cmc/combo.hpp"
#include "cmc/errors.hpp"
#include "cmc/laplace.hpp"
#include "cmc/matrix.hpp"
#include "cmc/oracles.hpp"
#include "cmc/samplers.hpp"
#include "cmc/verify.hpp"

using cmc::Combo;
using cmc::RMatrix;
using cmc::Rational;

TEST_CASE("strategy parsing accepts the documented grammar") {
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("bareiss", 4)) == "bareiss");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("permutation", 4)) == "permutation");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("cofactor", 4)) == "cofactor:1");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("cofactor:3", 4)) == "cofactor:3");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("pair-rows", 4)) == "pair-rows:1,2");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("pair-rows:2,4", 4)) == "pair-rows:2,4");
  CHECK(cmc::strategy_name(cmc::parse_det_strategy("general-rows:1,3,4", 5)) ==
        "general-rows:1,3,4");
  CHECK_THROWS_AS(cmc::parse_det_strategy("gauss", 4), cmc::ParseError);
  CHECK_THROWS_AS(cmc::parse_det_strategy("cofactor:x", 4), cmc::ParseError);
  CHECK_THROWS_AS(cmc::parse_det_strategy("general-rows", 4), cmc::ParseError);
  CHECK_THROWS_AS(cmc::parse_det_strategy("cofactor:5", 4), cmc::RankError);
  CHECK_THROWS_AS(cmc::parse_det_strategy("pair-rows:2,2", 4), cmc::RankError);
}

TEST_CASE("every strategy computes the same determinant") {
  cmc::Sampler s(1719);
  for (int t = 0; t < 12; ++t) {
    std::size_t n = 2 + s.below(4);
    RMatrix a = s.matrix(n, n, 5, 3);
    Rational expected = cmc::det_bareiss(a);
    std::vector<std::string> names = {"bareiss", "permutation", "cofactor",
                                      "pair-rows"};
    for (const auto& name : names) {
      CHECK(cmc::det_with(a, cmc::parse_det_strategy(name, n)) == expected);
    }
    for (std::size_t r = 1; r <= n; ++r) {
      CHECK(cmc::det_cofactor(a, r) == expected);
    }
  }
}

TEST_CASE("pair expansion matches every row choice") {
  cmc::Sampler s(88);
  RMatrix a = s.matrix(5, 5, 4, 3);
  Rational expected = cmc::det_bareiss(a);
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = i + 1; j <= 5; ++j) {
      CHECK(cmc::det_laplace_pair(a, i, j) == expected);
    }
  }
}

TEST_CASE("general expansion matches every row subset") {
  cmc::Sampler s(89);
  RMatrix a = s.matrix(5, 5, 4, 3);
  Rational expected = cmc::det_bareiss(a);
  for (unsigned p = 1; p <= 4; ++p) {
    const auto total = cmc::binomial(5, p);
    for (std::uint64_t r = 1; r <= total; ++r) {
      CHECK(cmc::det_laplace_general(a, Combo::subset_at(5, p, r)) == expected);
    }
  }
  CHECK_THROWS_AS(cmc::det_laplace_general(a, Combo(4, {1, 2})), cmc::DimensionError);
}

TEST_CASE("adjugate satisfies the cofactor identity") {
  cmc::Sampler s(90);
  for (int t = 0; t < 15; ++t) {
    std::size_t n = 2 + s.below(4);
    RMatrix a = t % 2 == 0 ? s.matrix(n, n, 5, 3) : s.singular_of_rank(n, n - 1, 4);
    Rational d = cmc::det_bareiss(a);
    RMatrix adj = cmc::adjugate(a);
    CHECK(a * adj == RMatrix::identity(n).scaled(d));
    CHECK(adj * a == RMatrix::identity(n).scaled(d));
  }
  CHECK_THROWS_AS(cmc::adjugate(RMatrix{{3}}), cmc::DimensionError);
}

TEST_CASE("adjugate rank collapse below corank one") {
  cmc::Sampler s(91);
  RMatrix a = s.singular_of_rank(4, 2, 3);
  CHECK(cmc::adjugate(a).is_zero());
  RMatrix b = s.singular_of_rank(4, 3, 3);
  CHECK(cmc::rank_of(cmc::adjugate(b)) == 1);
}

TEST_CASE("adjugate golden for a 2x2") {
  RMatrix a{{1, 2}, {3, 4}};
  CHECK(cmc::adjugate(a) == RMatrix{{4, -2}, {-3, 1}});
}

TEST_CASE("golden fixture determinant through the expansion strategies") {
  const RMatrix& a = cmc::golden_fixtures().a;
  CHECK(cmc::det_cofactor(a, 1) == Rational(0));
  CHECK(cmc::det_laplace_pair(a, 1, 2) == Rational(0));
  CHECK(cmc::det_laplace_general(a, Combo(4, {2, 3, 4})) == Rational(0));
}
