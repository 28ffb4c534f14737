#pragma once

#include <cstddef>
#include <vector>

#include "cmc/matrix.hpp"

namespace cmc {

// Brute-force reference computations. These are the ground truth the rest
// of the library is checked against, so they stay structurally independent
// of the expansion-based routines: det_permutation sums the Leibniz
// permutation series, everything else is plain exact elimination.

// Leibniz determinant, hard-capped at order 8 (OracleSizeError beyond).
// The 0x0 determinant is 1.
Rational det_permutation(const RMatrix& a);

// Fraction-free (Bareiss) elimination determinant; every intermediate
// division is exact. Works at any order.
Rational det_bareiss(const RMatrix& a);

// Row rank by exact forward elimination; rectangular input is fine.
std::size_t rank_of(const RMatrix& a);

// Canonical nullspace basis from the reduced row echelon form: one vector
// per free column, in ascending column order, with each vector scaled by a
// common denominator so all entries are integers (the free coordinate
// stays positive). Returns n-by-1 column matrices.
std::vector<RMatrix> nullspace_oracle(const RMatrix& a);

// True iff the two lists of equal-height column vectors span the same
// subspace: stacking either list against the other leaves rank unchanged.
bool span_equal(const std::vector<RMatrix>& u, const std::vector<RMatrix>& v);

}  // namespace cmc
