#include "schreier/oracle.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "schreier/errors.hpp"

namespace schreier::oracle {

namespace {

class Enumerator {
 public:
  Enumerator(const NormParams& params, const SparseVec& x) : params_(params) {
    for (const auto& [i, q] : x.entries()) {
      index_.push_back(i);
      abs_.push_back(abs(q));
    }
    if (index_.size() > 20) throw BudgetExceeded("partition enumeration supports at most 20 points");
  }

  Rational run() { return value(full_mask()); }

 private:
  std::uint32_t full_mask() const { return (std::uint32_t{1} << index_.size()) - 1; }

  Rational value(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Rational best(0);
    for (std::size_t i = 0; i < index_.size(); ++i)
      if (mask >> i & 1U && abs_[i] > best) best = abs_[i];
    if (std::popcount(mask) > 1) {
      std::vector<Index> mins;
      Rational sums = sup_sum(mask, mask, /*last_pos=*/-1, mins);
      if (params_.c * sums > best) best = params_.c * sums;
    }
    memo_.emplace(mask, best);
    return best;
  }

  // Largest sum of block values over successive blocks drawn from `avail`
  // (positions after last_pos), given the minima already chosen. Zero when
  // no further block is taken. The whole mask as a single block is skipped
  // since it would refer to the value being computed.
  Rational sup_sum(std::uint32_t whole, std::uint32_t avail, int last_pos, std::vector<Index>& mins) {
    Rational best(0);
    std::uint32_t rest = avail;
    if (last_pos >= 0) rest &= ~((std::uint32_t{2} << last_pos) - 1);
    // Chose block B subset of rest, non-empty.
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b == whole) continue;
      const int first = std::countr_zero(b);
      const int last = 31 - std::countl_zero(b);
      const Index lo = last_pos >= 0 ? index_[static_cast<std::size_t>(last_pos)] + 1 : 1;
      const Index hi = index_[static_cast<std::size_t>(first)];
      const Rational bv = value(b);
      for (Index m = lo; m <= hi; ++m) {
        mins.push_back(m);
        if (params_.family.contains(FinSet::from_sorted(mins))) {
          Rational cand = bv + sup_sum(whole, avail, last, mins);
          if (cand > best) best = std::move(cand);
        }
        mins.pop_back();
      }
    }
    return best;
  }

  const NormParams& params_;
  std::vector<Index> index_;
  std::vector<Rational> abs_;
  std::unordered_map<std::uint32_t, Rational> memo_;
};

}  // namespace

Rational partition_enumeration_norm(const NormParams& params, const SparseVec& x) {
  if (x.is_zero()) return Rational(0);
  return Enumerator(params, x).run();
}

}  // namespace schreier::oracle
