#pragma once

#include <cstddef>
#include <vector>

#include "schreier/norm.hpp"

namespace schreier {

struct Functional {
  SparseVec f;
  std::size_t depth = 0;  // first generation containing f
};

/// K_depth over [1..bound]: K_0 = {+-e*_i}, and K_{d+1} adds
/// c*(f_1+...+f_k) for k >= 2 members of K_d with successive supports whose
/// minima form a member of the family.
class FunctionalSet {
 public:
  Index bound() const noexcept { return bound_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Functional>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const SparseVec& f) const;

 private:
  friend FunctionalSet norming_set(const NormParams&, Index, std::size_t, std::size_t);
  Index bound_ = 0;
  std::size_t depth_ = 0;
  std::vector<Functional> members_;  // sorted by text form
};

/// Throws BudgetExceeded once more than `budget` functionals exist.
FunctionalSet norming_set(const NormParams& params, Index bound, std::size_t depth,
                          std::size_t budget = 1'000'000);

/// max over K_depth on [1..max supp x] of <f,x>, by a recursion over the
/// minimum and the support ceiling of the functional; K is never built.
Rational norm_via_functionals(const NormParams& params, const SparseVec& x, std::size_t depth);

/// max over the members of `set`; supp(x) must lie in [1..set.bound()].
Rational norm_via_functionals(const FunctionalSet& set, const SparseVec& x);

struct DualNormResult {
  Rational value;
  std::vector<std::pair<SparseVec, Rational>> decomposition;  // (f_j, lambda_j), lambda_j > 0
  SparseVec dual_witness;  // y with <f,y> <= 1 on K and <g,y> = value
};

/// min sum lambda_j over g = sum lambda_j f_j, lambda_j >= 0, f_j in K (K is
/// symmetric, so this is the gauge of conv K). Solved exactly by column
/// generation on a restricted master LP. Throws DomainError if supp(g)
/// leaves the bound.
DualNormResult dual_norm(const FunctionalSet& set, const SparseVec& g);
DualNormResult dual_norm(const NormParams& params, const SparseVec& g, Index bound, std::size_t depth);

}  // namespace schreier
