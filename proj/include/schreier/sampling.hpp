#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "schreier/indices.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/sparse_vec.hpp"

/// Seeded random instances for property checks.
namespace schreier::sampling {

using Rng = std::mt19937_64;

Index uniform(Rng& rng, Index lo, Index hi);

/// p/q with |p| <= 6 and q in [1..4], never zero.
Rational nonzero_rational(Rng& rng);

/// A vector with between 1 and max_support nonzero entries on [1..bound].
SparseVec vector(Rng& rng, Index bound, std::size_t max_support);

/// A vector whose support size is drawn with weight ~ 2^{-k} above 6, so
/// large supports are present but rare.
SparseVec vector_weighted(Rng& rng, Index bound);

/// Uniform random subset of [1..bound].
FinSet subset(Rng& rng, Index bound);

/// A CNF ordinal of nesting depth at most `depth`; depth 0 gives 0..5.
Ordinal ordinal(Rng& rng, unsigned depth);

/// Between 1 and 3 generators, each at most `max_length` successive blocks
/// of size 1..3 inside [1..bound].
BlockTree spreading_block_tree(Rng& rng, std::size_t max_length, Index bound);

/// Each element moved to a random position >= itself, increasing.
std::map<Index, Index> spread(Rng& rng, const FinSet& support, Index slack);

}  // namespace schreier::sampling
