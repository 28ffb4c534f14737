#include <doctest.h>

#include <cstddef>

#include "cmc/errors.hpp"
#include "cmc/kernel.hpp"
#include "cmc/matrix.hpp"
#include "cmc/oracles.hpp"
#include "cmc/samplers.hpp"
#include "cmc/verify.hpp"

using cmc::KernelSource;
using cmc::RMatrix;
using cmc::Rational;

TEST_CASE("two-row cofactor matrix of the worked example") {
  const auto& g = cmc::golden_fixtures();
  RMatrix k = cmc::cofactor_matrix_order2(g.a, 1, 2);
  CHECK(k == g.k12);
  CHECK((g.a * k).is_zero());
  CHECK(cmc::rank_of(k) == 2);
}

TEST_CASE("cofactor template columns die on the chosen rows") {
  cmc::Sampler s(15);
  for (int t = 0; t < 10; ++t) {
    RMatrix a = s.matrix(4, 4, 5, 3);
    for (std::size_t i1 = 1; i1 <= 4; ++i1) {
      for (std::size_t i2 = i1 + 1; i2 <= 4; ++i2) {
        RMatrix k = cmc::cofactor_matrix_order2(a, i1, i2);
        RMatrix product = a * k;
        for (std::size_t c = 1; c <= 4; ++c) {
          CHECK(product.at(i1, c).is_zero());
          CHECK(product.at(i2, c).is_zero());
        }
        CHECK(cmc::rank_of(k) <= 2);
      }
    }
  }
  CHECK_THROWS_AS(cmc::cofactor_matrix_order2(RMatrix::identity(5), 1, 2),
                  cmc::DimensionError);
  CHECK_THROWS_AS(cmc::cofactor_matrix_order2(RMatrix::identity(4), 2, 2),
                  cmc::RankError);
}

TEST_CASE("corank one kernel is the adjugate column") {
  cmc::Sampler s(16);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + s.below(5);
    RMatrix a = s.singular_of_rank(n, n - 1, 4);
    auto res = cmc::kernel_corank1(a);
    CHECK(res.corank == 1);
    CHECK(res.source == KernelSource::Adjugate);
    CHECK(res.source_label() == "Adjugate");
    REQUIRE(res.basis.size() == 1);
    CHECK((a * res.basis[0]).is_zero());
    CHECK(cmc::span_equal(res.basis, cmc::nullspace_oracle(a)));
  }
  cmc::Sampler s2(17);
  CHECK_THROWS_AS(cmc::kernel_corank1(s2.invertible(3, 4, 2)),
                  cmc::CorankMismatchError);
  CHECK_THROWS_AS(cmc::kernel_corank1(s2.singular_of_rank(4, 2, 3)),
                  cmc::CorankMismatchError);
}

TEST_CASE("corank two kernel at order four") {
  cmc::Sampler s(18);
  for (int t = 0; t < 20; ++t) {
    RMatrix a = s.singular_of_rank(4, 2, 4);
    auto res = cmc::kernel_corank2_4x4(a);
    CHECK(res.corank == 2);
    REQUIRE(res.basis.size() == 2);
    for (const auto& v : res.basis) CHECK((a * v).is_zero());
    CHECK(cmc::span_equal(res.basis, cmc::nullspace_oracle(a)));
    if (res.source == KernelSource::Order2Cofactors) {
      CHECK(res.pair_r1 < res.pair_r2);
      CHECK(res.source_label() ==
            "Order2Cofactors(" + std::to_string(res.pair_r1) + "," +
                std::to_string(res.pair_r2) + ")");
    }
  }
  CHECK_THROWS_AS(cmc::kernel_corank2_4x4(RMatrix::identity(4)),
                  cmc::CorankMismatchError);
}

TEST_CASE("worked example through the corank two path") {
  const auto& g = cmc::golden_fixtures();
  auto res = cmc::kernel_corank2_4x4(g.a);
  CHECK(res.source == KernelSource::Order2Cofactors);
  CHECK(res.pair_r1 == 1);
  CHECK(res.pair_r2 == 2);
  REQUIRE(res.basis.size() == 2);
  CHECK(res.basis[0] == g.k12.column_matrix(1));
  CHECK(res.basis[1] == g.k12.column_matrix(2));
}

TEST_CASE("dispatch covers every corank") {
  cmc::Sampler s(19);
  auto full = cmc::kernel_of(s.invertible(4, 4, 2));
  CHECK(full.corank == 0);
  CHECK(full.basis.empty());

  auto one = cmc::kernel_of(s.singular_of_rank(5, 4, 3));
  CHECK(one.corank == 1);
  CHECK(one.source == KernelSource::Adjugate);

  auto two = cmc::kernel_of(s.singular_of_rank(4, 2, 3));
  CHECK(two.corank == 2);

  RMatrix flat = s.singular_of_rank(5, 2, 3);
  auto deep = cmc::kernel_of(flat);
  CHECK(deep.corank == 3);
  CHECK(deep.source == KernelSource::EliminationFallback);
  CHECK(deep.source_label() == "EliminationFallback");
  CHECK(cmc::span_equal(deep.basis, cmc::nullspace_oracle(flat)));
}
