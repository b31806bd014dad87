#include "schreier/sampling.hpp"

#include <algorithm>

namespace schreier::sampling {

Index uniform(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

Rational nonzero_rational(Rng& rng) {
  int p = static_cast<int>(uniform(rng, 1, 6));
  if (uniform(rng, 0, 1)) p = -p;
  Rational r(p, static_cast<int>(uniform(rng, 1, 4)));
  r.canonicalize();
  return r;
}

SparseVec vector(Rng& rng, Index bound, std::size_t max_support) {
  const std::size_t k = uniform(rng, 1, static_cast<Index>(std::min<std::size_t>(max_support, bound)));
  SparseVec x;
  while (x.support_size() < k) x.set(uniform(rng, 1, bound), nonzero_rational(rng));
  return x;
}

SparseVec vector_weighted(Rng& rng, Index bound) {
  std::size_t k = uniform(rng, 1, std::min<Index>(6, bound));
  while (k < bound && uniform(rng, 0, 1)) ++k;
  SparseVec x;
  while (x.support_size() < k) x.set(uniform(rng, 1, bound), nonzero_rational(rng));
  return x;
}

FinSet subset(Rng& rng, Index bound) {
  std::vector<Index> out;
  for (Index i = 1; i <= bound; ++i)
    if (uniform(rng, 0, 1)) out.push_back(i);
  return FinSet::from_sorted(std::move(out));
}

Ordinal ordinal(Rng& rng, unsigned depth) {
  if (depth == 0) return Ordinal::natural(uniform(rng, 0, 5));
  std::vector<Ordinal> exps;
  const Index terms = uniform(rng, 0, 3);
  for (Index i = 0; i < terms; ++i) exps.push_back(ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdinalTerm> out;
  for (auto& e : exps) out.push_back({std::move(e), Integer(static_cast<unsigned long>(uniform(rng, 1, 4)))});
  return Ordinal::from_terms(std::move(out));
}

BlockTree spreading_block_tree(Rng& rng, std::size_t max_length, Index bound) {
  std::vector<BlockSeq> gens;
  const Index count = uniform(rng, 1, 3);
  for (Index g = 0; g < count; ++g) {
    BlockSeq seq;
    const std::size_t len = uniform(rng, 0, static_cast<Index>(max_length));
    Index next = uniform(rng, 1, std::max<Index>(1, bound / 3));
    for (std::size_t b = 0; b < len && next <= bound; ++b) {
      const Index size = std::min(uniform(rng, 1, 3), bound - next + 1);
      seq.push_back(FinSet::interval(next, next + size - 1));
      next += size + uniform(rng, 0, 1);
    }
    gens.push_back(std::move(seq));
  }
  return BlockTree(std::move(gens), Closure::spreading);
}

std::map<Index, Index> spread(Rng& rng, const FinSet& support, Index slack) {
  std::map<Index, Index> out;
  Index last = 0;
  for (Index i : support) {
    const Index lo = std::max(i, last + 1);
    last = uniform(rng, lo, lo + slack);
    out.emplace(i, last);
  }
  return out;
}

}  // namespace schreier::sampling
