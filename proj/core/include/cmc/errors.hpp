#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

// Every failure in this library is an exact, structural condition; there
// are no tolerance-based errors. All exceptions derive from Error so
// callers can distinguish library failures from std ones.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not admit the requested operation.
struct DimensionError : Error {
  using Error::Error;
};

// A brute-force oracle was asked for more work than its hard cap allows.
struct OracleSizeError : Error {
  using Error::Error;
};

// A combination index, lexicographic rank, or minor order is out of range.
struct RankError : Error {
  using Error::Error;
};

// A kernel construction was applied to a matrix of the wrong corank.
struct CorankMismatchError : Error {
  using Error::Error;
};

// An operation defined only for invertible input received a singular one.
struct SingularError : Error {
  using Error::Error;
};

// A check restricted to a matrix group received a matrix outside it.
struct MembershipError : Error {
  using Error::Error;
};

// Input data is structurally unusable (e.g. a zero diagonal entry where
// the reconstruction divides by it).
struct DegenerateInputError : Error {
  using Error::Error;
};

// Text input does not match the expected grammar.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace cmc
