#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmc/matrix.hpp"

namespace cmc {

enum class PropertyStatus {
  Verified,
  CounterexampleFound,
  DiscrepancyWithPaper,
};

std::string to_string(PropertyStatus s);

// Everything needed to replay a non-trivial outcome by hand: the matrices
// and scalars the verdict was computed from.
struct Witness {
  std::vector<std::pair<std::string, RMatrix>> matrices;
  std::vector<std::pair<std::string, std::string>> values;

  bool empty() const { return matrices.empty() && values.empty(); }
};

// Outcome of checking one identity. paper_claim quotes the identity as
// originally stated; computed_claim states what the computation actually
// established. A documented discrepancy is an expected, recorded deviation
// between the two and does not count as a failure.
struct PropertyReport {
  std::string property;
  PropertyStatus status = PropertyStatus::Verified;
  std::uint64_t instances_tested = 0;
  std::string paper_claim;
  std::string computed_claim;
  Witness witness;
  bool documented_discrepancy = false;

  bool failed() const {
    return status == PropertyStatus::CounterexampleFound && !documented_discrepancy;
  }
};

struct GroupMembership {
  bool invertible = false;
  bool special = false;     // det == 1
  bool orthogonal = false;  // transpose(a) * a == I
};

GroupMembership classify_membership(const RMatrix& a);

// m_p(a b) == m_p(a) m_p(b) for one pair.
PropertyReport check_multiplicativity(const RMatrix& a, const RMatrix& b, std::size_t p);

// det(m_p(a)) == det(a)^C(n-1, p-1), compared against the exponent the
// source statement carries for this (n, p); a structural mismatch between
// the two exponents is reported as a documented discrepancy.
PropertyReport check_sylvester_franke(const RMatrix& a, std::size_t p);

// m_{n-1}(m_{n-1}(a)) == det(a)^{n-2} a for invertible a (SingularError
// otherwise); on det(a) == 1 this is the identity map.
PropertyReport check_double_compound(const RMatrix& a);

// Membership carries over: special a gives special m_p(a), orthogonal a
// gives orthogonal m_p(a).
PropertyReport check_group_preservation(const RMatrix& a, std::size_t p);

// For a in SO(4): m_3(a) equals D J a J D (D the order-3 sign diagonal,
// J the reversal) and applying m_3 twice returns a. MembershipError when
// a is not special orthogonal.
PropertyReport check_so4_involution(const RMatrix& a);

// Search for distinct a, b with m_p(a) == m_p(b) on GL(n). For even p the
// pair (a, -a) always collides, so the claim of injectivity fails with a
// replayable witness; for odd p the probe reports the sampled evidence.
PropertyReport probe_injectivity(std::size_t p, std::size_t n, std::uint64_t trials,
                                 std::uint64_t seed = 1);

struct DiagonalPreimage {
  enum class Outcome {
    Reconstructed,    // a rational diagonal preimage exists and is returned
    ConditionFailed,  // the product conditions rule out any diagonal preimage
    RealOnly,         // a real preimage exists but the leading entry is irrational
    ComplexOnly,      // only a complex preimage exists
  };

  Outcome outcome = Outcome::ConditionFailed;
  std::optional<RMatrix> matrix;
  std::string detail;
};

// Reconstruct a diagonal 4x4 matrix whose order-2 compound is
// diag(mu_1..mu_6), if one exists. Zero entries are refused with
// DegenerateInputError (the reconstruction divides by them); failures name
// the product equation that broke.
DiagonalPreimage diagonal_preimage(const std::array<Rational, 6>& mu);

}  // namespace cmc
