#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schreier/finset.hpp"
#include "schreier/ordinal.hpp"

namespace schreier {

class Family;

namespace detail {

class FamilyNode {
 public:
  virtual ~FamilyNode() = default;

  virtual bool contains(const FinSet& a) const = 0;
  /// Is there an x > floor, x not in `a`, with a + {x} a member? For
  /// spreading families this is decided by a single probe above
  /// max(a, floor, threshold()).
  virtual bool extendable(const FinSet& a, Index floor) const;
  /// Elements above this value are interchangeable for membership purposes.
  virtual Index threshold() const { return 0; }
  virtual bool spreading() const = 0;
  virtual std::string descriptor() const = 0;
  /// {B : prefix < B, prefix + B in family}; `prefix` is known to be a member.
  virtual Family residual(const Family& self, const FinSet& prefix) const;
};

}  // namespace detail

/// A symbolic compact hereditary family of finite subsets of N. Cheap to
/// copy (shared immutable node); membership is the only required query.
class Family {
 public:
  /// F_alpha, the fine Schreier family of order alpha.
  static Family fine_schreier(Ordinal alpha);
  /// S_alpha = F_{w^alpha}; alpha must be >= 1.
  static Family schreier(Ordinal alpha);
  /// Family given by its members. With `close_downward` all subsets of the
  /// given sets are added, which makes the result hereditary.
  static Family explicit_sets(std::span<const FinSet> sets, bool close_downward = true);
  /// Members of `base` all of whose elements exceed `bound`.
  static Family restriction(Family base, Index bound);
  static Family union_of(std::vector<Family> parts);
  /// The family with no members at all (not even the empty set).
  static Family empty();

  bool contains(const FinSet& a) const { return node_->contains(a); }
  bool extendable(const FinSet& a, Index floor = 0) const { return node_->extendable(a, floor); }
  Index threshold() const { return node_->threshold(); }
  bool spreading() const { return node_->spreading(); }
  /// Canonical text, stable across runs; equal text means equal family.
  std::string descriptor() const { return node_->descriptor(); }
  /// No members. Exact for hereditary families.
  bool is_empty() const { return !contains(FinSet{}); }

  const detail::FamilyNode& node() const { return *node_; }

  explicit Family(std::shared_ptr<const detail::FamilyNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const detail::FamilyNode> node_;
};

/// A in F_alpha, by the fine Schreier recursion
///   F_0 = {{}},  F_{a+1} = {{}} u {{n} u A : n < A, A in F_a},
///   F_lambda = {{}} u {A : A in F_{lambda[n]} for some n <= min A}.
bool fs_member(const Ordinal& alpha, const FinSet& a);
/// A in S_alpha; throws DomainError for alpha = 0.
bool schreier_member(const Ordinal& alpha, const FinSet& a);

/// Drops the internal memo of limit-stage membership answers.
void clear_membership_memo();

/// A is a member and A + {max A + 1} (the single spreading probe) is not.
/// Throws DomainError if A is not a member.
bool is_maximal(const Family& fam, const FinSet& a);

struct EnumerateOptions {
  Index bound = 1;
  bool maximal_only = false;
  std::size_t budget = std::size_t{1} << 22;  // visited sets
};

/// Members inside [1..bound] in lexicographic order. Maximality is judged in
/// N, not inside the bound. Throws BudgetExceeded.
std::vector<FinSet> enumerate(const Family& fam, const EnumerateOptions& opts);

/// Blocks are successive and their minima form a member of `fam`.
/// Requires a non-empty list of non-empty blocks.
bool is_admissible(const Family& fam, std::span<const FinSet> blocks);

/// {B : prefix < B, prefix u B in fam}. Fine Schreier families reduce
/// symbolically: successor steps drop the minimum, limits become a finite
/// union over the admissible n <= min(prefix). Throws if prefix is not a member.
Family residual(const Family& fam, const FinSet& prefix);

struct StructureReport {
  bool hereditary = false;
  bool spreading = false;
  bool compact_no_chain = false;
};

/// Exhaustive over subsets of [1..bound] (bound <= 20). The compactness probe
/// grows the interval chain {n}, {n,n+1}, ... from every start n <= bound
/// until it leaves the family; `chain_cap` bounds its length.
StructureReport check_structure(const Family& fam, Index bound, std::size_t chain_cap = 256);

/// The non-maximal members. Throws DomainError for non-spreading input,
/// where the single-probe maximality test is not sound.
Family cb_derivative(const Family& fam);

struct CbIndexResult {
  std::optional<std::size_t> index;  // nullopt: index >= budget
  std::size_t budget = 0;
};

/// Least k with the k-th derivative empty, found by iteration up to `budget`.
CbIndexResult cb_index_finite(const Family& fam, std::size_t budget);

}  // namespace schreier
