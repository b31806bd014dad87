#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

using Index = std::uint32_t;

/// A finite set of positive integers, stored strictly increasing.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Index> elems);

  /// Sorts and deduplicates; throws DomainError on a 0 element.
  static FinSet from_unsorted(std::vector<Index> elems);
  /// Throws DomainError unless `elems` is strictly increasing and positive.
  static FinSet from_sorted(std::vector<Index> elems);
  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static FinSet interval(Index lo, Index hi);
  /// The set whose bit i-1 is set in `mask`.
  static FinSet from_mask(std::uint64_t mask);

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  Index min() const { return elems_.front(); }
  Index max() const { return elems_.back(); }
  Index operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Index> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(Index n) const;
  bool subset_of(const FinSet& other) const;

  FinSet with(Index n) const;
  FinSet without(Index n) const;
  /// This set minus its minimum; requires non-empty.
  FinSet tail() const;
  /// First k elements.
  FinSet prefix(std::size_t k) const;
  FinSet united(const FinSet& other) const;

  std::uint64_t mask() const;  // requires max() <= 64
  std::size_t hash() const noexcept;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  /// Lexicographic order of the increasing element lists.
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<Index> elems_;
};

/// A < B: every element of A is below every element of B.
bool precedes(const FinSet& a, const FinSet& b);
/// n < A.
bool precedes(Index n, const FinSet& a);
/// |A| == |B| and a_i <= b_i pointwise.
bool is_spread(const FinSet& a, const FinSet& b);
/// A_1 < A_2 < ... < A_k.
bool is_successive(std::span<const FinSet> blocks);

/// `2,5,9`; the empty set is `-`.
FinSet parse_finset(std::string_view text);
std::string to_string(const FinSet& a);

struct FinSetHash {
  std::size_t operator()(const FinSet& a) const noexcept { return a.hash(); }
};

}  // namespace schreier
