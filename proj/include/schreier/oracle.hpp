#pragma once

#include "schreier/norm.hpp"

/// Reference implementations kept independent of the optimized paths they
/// check. Exponential; intended for supports of at most ~10 points.
namespace schreier::oracle {

/// ||x||_{F,c} by exhaustive enumeration of partition trees: every block is
/// an arbitrary subset of supp(x) (gaps allowed), every admissible integer
/// minimum is tried, and membership is queried on the full set of minima.
Rational partition_enumeration_norm(const NormParams& params, const SparseVec& x);

}  // namespace schreier::oracle
