#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/finset.hpp"
#include "schreier/rational.hpp"

namespace schreier {

/// A finitely supported vector in c00 with exact rational entries. Zero
/// entries are never stored, so equal vectors have equal representations.
class SparseVec {
 public:
  SparseVec() = default;

  /// e_i
  static SparseVec unit(Index i);
  static SparseVec from_entries(const std::map<Index, Rational>& entries);

  Rational operator[](Index i) const;
  void set(Index i, const Rational& value);

  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }
  FinSet support() const;
  const std::map<Index, Rational>& entries() const noexcept { return entries_; }

  Rational sup_norm() const;
  Rational l1_norm() const;
  /// A x: the coordinates in `a` only.
  SparseVec project(const FinSet& a) const;

  SparseVec operator+(const SparseVec& other) const;
  SparseVec operator-() const;
  SparseVec scaled(const Rational& s) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::map<Index, Rational> entries_;
};

Rational dot(const SparseVec& f, const SparseVec& x);

/// `3:1,4:1,5:-2/3`; the zero vector is `0` or empty.
SparseVec parse_sparse_vec(std::string_view text);
std::string to_string(const SparseVec& x);

}  // namespace schreier
