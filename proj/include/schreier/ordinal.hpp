#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/rational.hpp"

namespace schreier {

struct OrdinalTerm;

/// An ordinal below epsilon_0 in Cantor Normal Form:
///   w^(e_1)*c_1 + w^(e_2)*c_2 + ... + w^(e_k)*c_k,   e_1 > e_2 > ... > e_k,
/// with every c_i >= 1. The empty term list is 0.
///
/// Values are immutable once built; every operation returns a fresh value in
/// normal form, so structural equality is ordinal equality.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal zero() { return {}; }
  static Ordinal natural(std::uint64_t n);
  static Ordinal natural(const Integer& n);
  static Ordinal omega();

  /// Builds from terms; throws DomainError unless they are in normal form.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept;

  /// The natural number this ordinal equals; nullopt when infinite.
  std::optional<Integer> as_natural() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Integer coefficient;
};

enum class OrdinalKind { zero, successor, limit };

struct Classification {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set for successors only
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);

/// Coefficientwise sum over the merged exponent lists (Hessenberg sum).
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

/// lambda[n] for the fixed fundamental sequences
///   (beta + w^(g+1))[n] = beta + w^g * n,
///   (beta + w^g)[n]     = beta + w^(g[n])    for limit g,
/// so w[n] = n. Throws DomainError for 0, successors, or n == 0.
Ordinal fundamental_seq(const Ordinal& lambda, std::uint64_t n);

Classification classify(const Ordinal& a);

/// Predecessor of a successor ordinal; throws DomainError otherwise.
Ordinal predecessor(const Ordinal& a);

/// Grammar: expr := term ('+' term)* ; term := atom ('*' atom)* ;
/// atom := nat | 'w' | 'w^' nat | 'w^(' expr ')' | '(' expr ')'.
/// Arbitrary expressions are normalized with ordinal + and *.
/// A literal multiplier of 0 is rejected.
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering, e.g. `w^(w+1)*2+w*3+4`.
std::string to_string(const Ordinal& a);

struct OrdinalHash {
  std::size_t operator()(const Ordinal& a) const noexcept { return a.hash(); }
};

}  // namespace schreier
