#include "cmc/compound.hpp"

#include <string>

#include "cmc/errors.hpp"
#include "cmc/opcount.hpp"
#include "cmc/oracles.hpp"

namespace cmc {

namespace {

constexpr std::size_t kMinorOracleCap = 8;

void require_square(const RMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + " requires a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

std::size_t require_order(const RMatrix& a, std::size_t p, const char* what) {
  require_square(a, what);
  std::size_t n = a.order();
  if (p < 1 || p > n) {
    throw RankError(std::string(what) + " of order " + std::to_string(p) +
                    " undefined for a matrix of order " + std::to_string(n));
  }
  return n;
}

std::vector<Combo> ranked_subsets(unsigned n, unsigned p) {
  std::uint64_t count = binomial(n, p);
  std::vector<Combo> subsets;
  subsets.reserve(count);
  for (std::uint64_t r = 1; r <= count; ++r) subsets.push_back(Combo::subset_at(n, p, r));
  return subsets;
}

}  // namespace

RMatrix SignDiagonal::as_matrix() const {
  std::vector<Rational> d;
  d.reserve(signs.size());
  for (int s : signs) d.emplace_back(s);
  return RMatrix::diagonal(d);
}

SignDiagonal sign_diagonal(std::size_t n, std::size_t p) {
  if (p > n) throw RankError("sign diagonal with subset size exceeding the ambient set");
  SignDiagonal d{n, p, {}};
  std::uint64_t count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(p));
  d.signs.reserve(count);
  for (std::uint64_t r = 1; r <= count; ++r) {
    d.signs.push_back(
        Combo::subset_at(static_cast<unsigned>(n), static_cast<unsigned>(p), r).sign());
  }
  return d;
}

RMatrix reversal_matrix(std::size_t order) {
  RMatrix j(order, order);
  for (std::size_t r = 1; r <= order; ++r) j.at(r, order + 1 - r) = Rational(1);
  return j;
}

Rational minor_det(const RMatrix& a, const Combo& row_set, const Combo& col_set) {
  if (row_set.size() != col_set.size()) {
    throw DimensionError("minor with " + std::to_string(row_set.size()) + " rows and " +
                         std::to_string(col_set.size()) + " columns");
  }
  if (row_set.ambient() != a.rows() || col_set.ambient() != a.cols()) {
    throw DimensionError("minor subsets drawn from a different matrix shape");
  }
  ++opcount::counters().minor_evaluations;
  std::size_t p = row_set.size();
  if (p == 0) return Rational(1);
  RMatrix sub(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      sub.at(i + 1, j + 1) = a.at(row_set.indices()[i], col_set.indices()[j]);
    }
  }
  return p <= kMinorOracleCap ? det_permutation(sub) : det_bareiss(sub);
}

CompoundMatrix compound(const RMatrix& a, std::size_t p) {
  std::size_t n = require_order(a, p, "compound");
  auto subsets = ranked_subsets(static_cast<unsigned>(n), static_cast<unsigned>(p));
  std::size_t count = subsets.size();
  RMatrix body(count, count);
  // Each entry is its own minor evaluation; nothing is shared between
  // entries, so any single entry can be recomputed in isolation.
  for (std::size_t r = 1; r <= count; ++r) {
    for (std::size_t s = 1; s <= count; ++s) {
      body.at(r, s) = minor_det(a, subsets[r - 1], subsets[s - 1]);
    }
  }
  return CompoundMatrix{n, p, std::move(body)};
}

CompoundMatrix complementary_compound(const RMatrix& a, std::size_t p) {
  std::size_t n = require_order(a, p, "complementary compound");
  auto subsets = ranked_subsets(static_cast<unsigned>(n), static_cast<unsigned>(p));
  std::size_t count = subsets.size();
  RMatrix body(count, count);
  for (std::size_t r = 1; r <= count; ++r) {
    for (std::size_t s = 1; s <= count; ++s) {
      body.at(r, s) = minor_det(a, subsets[r - 1].complement(), subsets[s - 1].complement());
    }
  }
  return CompoundMatrix{n, p, std::move(body)};
}

CompoundMatrix adjugate_compound(const RMatrix& a, std::size_t p) {
  std::size_t n = require_order(a, p, "signed complementary compound");
  auto subsets = ranked_subsets(static_cast<unsigned>(n), static_cast<unsigned>(p));
  std::size_t count = subsets.size();
  RMatrix body(count, count);
  for (std::size_t r = 1; r <= count; ++r) {
    const Combo& row_subset = subsets[r - 1];
    for (std::size_t s = 1; s <= count; ++s) {
      const Combo& col_subset = subsets[s - 1];
      // Row R, column S holds the minor on rows outside S and columns
      // outside R; the swap is what turns the generalized Laplace
      // expansion into the diagonal of the product m_p * m~_p.
      Rational m =
          minor_det(a, col_subset.complement(), row_subset.complement());
      if (row_subset.sign() * col_subset.sign() < 0) m = -m;
      body.at(r, s) = std::move(m);
    }
  }
  return CompoundMatrix{n, p, std::move(body)};
}

}  // namespace cmc
