#include <doctest.h>

#include <array>
#include <cstddef>
#include <string>

#include "cmc/compound.hpp"
#include "cmc/errors.hpp"
#include "cmc/homlab.hpp"
#include "cmc/matrix.hpp"
#include "cmc/oracles.hpp"
#include "cmc/samplers.hpp"

using cmc::PropertyStatus;
using cmc::RMatrix;
using cmc::Rational;

TEST_CASE("membership classification") {
  auto id = cmc::classify_membership(RMatrix::identity(3));
  CHECK(id.invertible);
  CHECK(id.special);
  CHECK(id.orthogonal);

  auto stretch = cmc::classify_membership(RMatrix::diagonal({Rational(2), Rational(1)}));
  CHECK(stretch.invertible);
  CHECK_FALSE(stretch.special);
  CHECK_FALSE(stretch.orthogonal);

  auto reflect = cmc::classify_membership(RMatrix{{0, 1}, {1, 0}});
  CHECK(reflect.orthogonal);
  CHECK_FALSE(reflect.special);

  CHECK_FALSE(cmc::classify_membership(RMatrix(2, 2)).invertible);
}

TEST_CASE("multiplicativity holds pair by pair") {
  cmc::Sampler s(222);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + s.below(3);
    RMatrix a = s.matrix(n, n, 4, 3);
    RMatrix b = s.matrix(n, n, 4, 3);
    for (std::size_t p = 1; p <= n; ++p) {
      auto rep = cmc::check_multiplicativity(a, b, p);
      CHECK(rep.status == PropertyStatus::Verified);
      CHECK_FALSE(rep.failed());
      CHECK(rep.instances_tested == 1);
    }
  }
}

TEST_CASE("determinant power law with the stated exponent cross-checked") {
  cmc::Sampler s(223);
  // At n=4, p=2 the stated exponent n-1=3 equals C(3,1)=3: verified.
  auto ok = cmc::check_sylvester_franke(s.invertible(4, 3, 2), 2);
  CHECK(ok.status == PropertyStatus::Verified);
  CHECK_FALSE(ok.documented_discrepancy);

  // At n=5, p=3 the stated exponent p=3 differs from C(4,2)=6: documented.
  auto off = cmc::check_sylvester_franke(s.invertible(5, 3, 2), 3);
  CHECK(off.status == PropertyStatus::DiscrepancyWithPaper);
  CHECK(off.documented_discrepancy);
  CHECK_FALSE(off.failed());
}

TEST_CASE("double compound identity and its singular refusal") {
  cmc::Sampler s(224);
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 3 + s.below(3);
    auto rep = cmc::check_double_compound(s.invertible(n, 3, 2));
    CHECK(rep.status == PropertyStatus::Verified);
    CHECK_FALSE(rep.failed());
  }
  auto sl = cmc::check_double_compound(s.special_linear(4, 3, 2));
  CHECK(sl.status == PropertyStatus::Verified);
  CHECK(sl.computed_claim.find("identity map") != std::string::npos);
  CHECK_THROWS_AS(cmc::check_double_compound(s.singular_of_rank(4, 2, 3)),
                  cmc::SingularError);
}

TEST_CASE("double compound exponent golden on diag(1,2,3,4)") {
  // det = 24. Applying m_3 twice scales by 24^2 = 576; the power 24^3 =
  // 13824 that the n-1 exponent would demand does not reproduce a.
  RMatrix d4 = RMatrix::diagonal({Rational(1), Rational(2), Rational(3), Rational(4)});
  RMatrix twice = cmc::compound(cmc::compound(d4, 3).body, 3).body;
  CHECK(twice == d4.scaled(Rational(576)));
  CHECK_FALSE(twice == d4.scaled(Rational(13824)));
  CHECK(cmc::check_double_compound(d4).status == PropertyStatus::Verified);
}

TEST_CASE("group membership carries through the compound map") {
  cmc::Sampler s(225);
  auto sl = cmc::check_group_preservation(s.special_linear(4, 3, 2), 2);
  CHECK(sl.status == PropertyStatus::Verified);
  auto so = cmc::check_group_preservation(s.special_orthogonal(4), 3);
  CHECK(so.status == PropertyStatus::Verified);
}

TEST_CASE("order-3 compound on SO(4) is conjugation and an involution") {
  cmc::Sampler s(226);
  for (int t = 0; t < 5; ++t) {
    RMatrix q = s.special_orthogonal(4);
    auto rep = cmc::check_so4_involution(q);
    CHECK(rep.status == PropertyStatus::Verified);
    CHECK_FALSE(rep.failed());
    // Replay the conjugation by hand.
    RMatrix d = cmc::sign_diagonal(4, 3).as_matrix();
    RMatrix j = cmc::reversal_matrix(4);
    CHECK(cmc::compound(q, 3).body == d * j * q * j * d);
    CHECK(cmc::compound(cmc::compound(q, 3).body, 3).body == q);
  }
  CHECK_THROWS_AS(cmc::check_so4_involution(RMatrix::identity(3)), cmc::DimensionError);
  CHECK_THROWS_AS(
      cmc::check_so4_involution(RMatrix::diagonal(
          {Rational(2), Rational(1), Rational(1), Rational(1)})),
      cmc::MembershipError);
}

TEST_CASE("injectivity collapses for even order and survives sampling for odd") {
  auto even = cmc::probe_injectivity(2, 3, 10);
  CHECK(even.status == PropertyStatus::CounterexampleFound);
  CHECK(even.documented_discrepancy);
  CHECK_FALSE(even.failed());
  REQUIRE(even.witness.matrices.size() >= 2);
  // Replay: the two witness matrices differ but share a compound.
  const RMatrix& a = even.witness.matrices[0].second;
  const RMatrix& b = even.witness.matrices[1].second;
  CHECK_FALSE(a == b);
  CHECK(cmc::compound(a, 2).body == cmc::compound(b, 2).body);

  auto odd = cmc::probe_injectivity(3, 4, 10);
  CHECK(odd.status == PropertyStatus::Verified);
  CHECK(odd.instances_tested == 10);
}

TEST_CASE("diagonal preimage reconstruction") {
  using Out = cmc::DiagonalPreimage::Outcome;

  auto good = cmc::diagonal_preimage({Rational(2), Rational(3), Rational(4),
                                      Rational(6), Rational(8), Rational(12)});
  CHECK(good.outcome == Out::Reconstructed);
  REQUIRE(good.matrix.has_value());
  CHECK(*good.matrix == RMatrix::diagonal({Rational(1), Rational(2), Rational(3),
                                           Rational(4)}));

  auto bad = cmc::diagonal_preimage({Rational(1), Rational(1), Rational(1),
                                     Rational(1), Rational(1), Rational(2)});
  CHECK(bad.outcome == Out::ConditionFailed);
  CHECK(bad.detail.find("mu1*mu6 = mu2*mu5") != std::string::npos);

  // mu = (2,2,2,2,2,2) satisfies the product conditions with t = 2, whose
  // square root is irrational: a real but non-rational preimage.
  auto irr = cmc::diagonal_preimage({Rational(2), Rational(2), Rational(2),
                                     Rational(2), Rational(2), Rational(2)});
  CHECK(irr.outcome == Out::RealOnly);

  // Negating every entry keeps the product conditions but forces the
  // leading square negative: complex only.
  auto cpx = cmc::diagonal_preimage({Rational(-2), Rational(-3), Rational(-4),
                                     Rational(-6), Rational(-8), Rational(-12)});
  CHECK(cpx.outcome == Out::ComplexOnly);

  CHECK_THROWS_AS(cmc::diagonal_preimage({Rational(0), Rational(1), Rational(1),
                                          Rational(1), Rational(1), Rational(1)}),
                  cmc::DegenerateInputError);
}

TEST_CASE("reconstruction round-trips through the compound") {
  cmc::Sampler s(227);
  for (int t = 0; t < 10; ++t) {
    RMatrix d = RMatrix::diagonal({s.rational(5, 3), s.rational(5, 3),
                                   s.rational(5, 3), s.rational(5, 3)});
    bool any_zero = false;
    for (std::size_t i = 1; i <= 4; ++i) {
      if (d.at(i, i).is_zero()) any_zero = true;
    }
    if (any_zero) continue;
    auto m2 = cmc::compound(d, 2);
    std::array<Rational, 6> mu;
    for (std::size_t i = 0; i < 6; ++i) mu[i] = m2.body.at(i + 1, i + 1);
    bool mu_zero = false;
    for (const auto& m : mu) {
      if (m.is_zero()) mu_zero = true;
    }
    if (mu_zero) continue;
    auto back = cmc::diagonal_preimage(mu);
    REQUIRE(back.outcome == cmc::DiagonalPreimage::Outcome::Reconstructed);
    CHECK(cmc::compound(*back.matrix, 2).body == m2.body);
  }
}
