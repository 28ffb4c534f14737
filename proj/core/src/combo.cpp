#include "cmc/combo.hpp"

#include <algorithm>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (n > 62) throw RankError("binomial supported up to n = 62, got n = " + std::to_string(n));
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;  // exact at every step: the prefix is C(n-k+i, i)
  }
  return b;
}

Combo::Combo(unsigned n, std::vector<unsigned> indices) : n_(n), idx_(std::move(indices)) {
  unsigned prev = 0;
  for (unsigned v : idx_) {
    if (v <= prev || v > n_) {
      throw RankError("combination indices must be strictly increasing within 1.." +
                      std::to_string(n_));
    }
    prev = v;
  }
}

std::uint64_t Combo::lex_rank() const {
  // Count the combinations that precede this one: for each position t, the
  // subsets that agree up to t-1 and then pick a smaller t-th member.
  std::uint64_t before = 0;
  unsigned prev = 0;
  unsigned p = size();
  for (unsigned t = 0; t < p; ++t) {
    for (unsigned v = prev + 1; v < idx_[t]; ++v) {
      before += binomial(n_ - v, p - t - 1);
    }
    prev = idx_[t];
  }
  return before + 1;
}

Combo Combo::subset_at(unsigned n, unsigned p, std::uint64_t rank) {
  if (p > n) throw RankError("subset size exceeds the ambient set");
  std::uint64_t total = binomial(n, p);
  if (rank < 1 || rank > total) {
    throw RankError("lexicographic rank " + std::to_string(rank) + " outside 1.." +
                    std::to_string(total));
  }
  std::uint64_t remaining = rank - 1;
  std::vector<unsigned> idx;
  idx.reserve(p);
  unsigned v = 1;
  for (unsigned t = 0; t < p; ++t) {
    for (;; ++v) {
      std::uint64_t block = binomial(n - v, p - t - 1);
      if (remaining < block) break;
      remaining -= block;
    }
    idx.push_back(v);
    ++v;
  }
  return Combo(n, std::move(idx));
}

Combo Combo::complement() const {
  std::vector<unsigned> rest;
  rest.reserve(n_ - size());
  auto it = idx_.begin();
  for (unsigned v = 1; v <= n_; ++v) {
    if (it != idx_.end() && *it == v) {
      ++it;
    } else {
      rest.push_back(v);
    }
  }
  return Combo(n_, std::move(rest));
}

unsigned Combo::index_sum() const {
  unsigned s = 0;
  for (unsigned v : idx_) s += v;
  return s;
}

bool Combo::contains(unsigned value) const {
  return std::binary_search(idx_.begin(), idx_.end(), value);
}

}  // namespace cmc
