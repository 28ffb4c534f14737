#pragma once

#include <cstdint>
#include <vector>

namespace cmc {

// C(n, k); throws RankError when the operands leave the supported range
// (n up to 62 keeps every intermediate in 64 bits).
std::uint64_t binomial(unsigned n, unsigned k);

// A p-element subset of {1..n} in increasing order. Subsets index the rows
// and columns of compound matrices, ranked lexicographically starting at 1:
// for n=4, p=2 the order is (1,2),(1,3),(1,4),(2,3),(2,4),(3,4). The empty
// subset is valid (it is the complement of the full one) and has rank 1.
class Combo {
 public:
  Combo(unsigned n, std::vector<unsigned> indices);  // RankError on bad input

  unsigned ambient() const { return n_; }
  unsigned size() const { return static_cast<unsigned>(idx_.size()); }
  const std::vector<unsigned>& indices() const { return idx_; }

  std::uint64_t lex_rank() const;  // 1-based
  static Combo subset_at(unsigned n, unsigned p, std::uint64_t rank);  // inverse of lex_rank

  Combo complement() const;

  // Sum of the member indices, and the sign (-1)^sum it induces on the
  // complementary-minor constructions.
  unsigned index_sum() const;
  int sign() const { return index_sum() % 2 == 0 ? 1 : -1; }

  bool contains(unsigned value) const;

  bool operator==(const Combo& o) const = default;

 private:
  unsigned n_;
  std::vector<unsigned> idx_;
};

}  // namespace cmc
