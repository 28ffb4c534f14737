#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "cmc/combo.hpp"
#include "cmc/matrix.hpp"

namespace cmc {

// Determinant strategies the expansion lab can run and compare. They all
// agree exactly; only the work profile differs.
struct Cofactor {
  std::size_t row = 1;
};
struct PairRows {
  std::size_t r1 = 1;
  std::size_t r2 = 2;
};
struct GeneralRows {
  Combo rows;
};
struct Bareiss {};
struct Permutation {};

using DetStrategy = std::variant<Cofactor, PairRows, GeneralRows, Bareiss, Permutation>;

// Parses "bareiss", "permutation", "cofactor[:i]", "pair-rows[:i,j]",
// "general-rows:i,j,..." against a matrix of order n. ParseError on an
// unknown name or malformed arguments, RankError on indices outside 1..n.
DetStrategy parse_det_strategy(std::string_view text, std::size_t n);

std::string strategy_name(const DetStrategy& s);

Rational det_with(const RMatrix& a, const DetStrategy& s);

// Single-row cofactor expansion; the recursion expands the first row of
// every submatrix and bottoms out at order 1.
Rational det_cofactor(const RMatrix& a, std::size_t row);

// Transposed cofactor matrix, defined for n >= 2. Satisfies
// a * adjugate(a) = det(a) * I even for singular a; it vanishes when
// rank <= n-2 and has rank 1 when rank = n-1.
RMatrix adjugate(const RMatrix& a);

// Laplace expansion along two rows: sum over column pairs j1 < j2 of
// (-1)^{i1+i2+j1+j2} times the order-2 minor times its complement.
Rational det_laplace_pair(const RMatrix& a, std::size_t i1, std::size_t i2);

// Laplace expansion along any fixed row subset U: sum over column subsets
// V of the same size of (-1)^{sum U + sum V} M_U^V M_{U'}^{V'} with primes
// denoting complements. This sign is the one that actually telescopes to
// the determinant; see the sign-convention verification suite for the
// variant it corrects.
Rational det_laplace_general(const RMatrix& a, const Combo& rows);

}  // namespace cmc
