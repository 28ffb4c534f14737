#pragma once

#include <cstdint>
#include <random>

#include "cmc/matrix.hpp"

namespace cmc {

// Deterministic generator of exact test matrices. All draws come from a
// seeded mt19937_64 through explicit arithmetic (no distribution objects),
// so a seed reproduces the same data on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }
  // Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  long long int_in(long long lo, long long hi);

  // Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(long long max_num, long long max_den);

  RMatrix matrix(std::size_t rows, std::size_t cols, long long max_num, long long max_den);
  RMatrix integer_matrix(std::size_t rows, std::size_t cols, long long max_abs);

  // Retries until the determinant is nonzero.
  RMatrix invertible(std::size_t n, long long max_num, long long max_den);

  // Product of an n-by-r and an r-by-n draw, retried until the rank is
  // exactly r.
  RMatrix singular_of_rank(std::size_t n, std::size_t r, long long max_abs);

  // Product of elementary shears: determinant exactly 1.
  RMatrix special_linear(std::size_t n, long long max_num, long long max_den);

  // Product of plane rotations through Pythagorean triples, optionally
  // stirred by an even permutation: exactly orthogonal with determinant 1.
  RMatrix special_orthogonal(std::size_t n);

 private:
  std::mt19937_64 eng_;
};

}  // namespace cmc
