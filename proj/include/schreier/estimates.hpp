#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "schreier/norm.hpp"

namespace schreier {

struct DominationResult {
  Rational lower_bound;  // ||w||_U / ||w||_V for the witness w
  SparseVec witness;
  std::size_t evaluations = 0;
};

/// Certified lower bound for the least C with ||x||_U <= C ||x||_V on
/// supp(x) in [1..bound]. Vectors with entries in {-1,0,1} are scanned by
/// support size, then the best one is refined coordinatewise. `budget`
/// caps the number of vectors evaluated.
DominationResult domination_search(const NormParams& u, const NormParams& v, Index bound,
                                   std::size_t budget);

/// The norm is unchanged under every sign pattern of x. Throws
/// BudgetExceeded for more than 12 support points.
bool check_unconditional(const NormParams& params, const SparseVec& x);

/// ||sum a_i e_i|| <= ||sum a_i e_{m(i)}||. `spread` must be increasing
/// with m(i) >= i on supp(x), else DomainError.
bool check_right_dominant(const NormParams& params, const SparseVec& x,
                          const std::map<Index, Index>& spread);

/// Moves each coordinate i of x to m(i).
SparseVec apply_spread(const SparseVec& x, const std::map<Index, Index>& spread);

struct L1Check {
  bool holds = false;
  NormResult norm;  // in T_alpha
  Rational lower;   // 2^{-n} sum |a_i|
};

/// For F in S_{alpha*n}: ||sum_{i in F} a_i e_i||_{T_alpha} >= 2^{-n} sum |a_i|.
/// Throws DomainError if F is not in S_{alpha*n} or the sizes differ.
L1Check check_l1_lower(const Ordinal& alpha, std::uint64_t n, const FinSet& f,
                       const std::vector<Rational>& coeffs);

/// k / 10^10 with k = floor(10^10 * 2^{-1/n}).
Rational inverse_root_two(std::uint64_t n);

struct RatioSample {
  SparseVec x;
  Rational upper;  // ||x||_{T_{alpha*n}}
  Rational lower;  // ||x||_{T_{alpha,c}}
};

struct EquivalenceReport {
  Rational c;
  std::size_t samples = 0;
  std::optional<Rational> max_ratio_up;    // max ||x||_{T_{alpha*n}} / ||x||_{T_{alpha,c}}
  std::optional<Rational> max_ratio_down;  // max of the reciprocal
  std::optional<RatioSample> witness_up;
  std::optional<RatioSample> witness_down;
};

/// Compares T_{alpha*n} with T_{alpha,c}, c = inverse_root_two(n), on
/// `samples` random vectors with support in [1..bound].
EquivalenceReport equivalence_sample(const Ordinal& alpha, std::uint64_t n, Index bound,
                                     std::size_t samples, std::uint64_t seed = 1);

}  // namespace schreier
