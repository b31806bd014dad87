#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "schreier/family.hpp"

namespace schreier {

/// A finite prefix-closed set of sequences over string labels.
class ExplicitTree {
 public:
  using Sequence = std::vector<std::string>;

  /// The tree {()} holding only the empty sequence.
  ExplicitTree();
  /// Adds every initial segment of every given sequence.
  static ExplicitTree from_sequences(const std::vector<Sequence>& sequences);
  /// {"sequences": [["a","b"], ...]}; numbers are accepted as labels.
  static ExplicitTree from_json(const nlohmann::json& j);

  bool contains(const Sequence& s) const { return nodes_.count(s) > 0; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::set<Sequence>& nodes() const noexcept { return nodes_; }

  /// Keeps the members with at least one one-step extension.
  ExplicitTree derivative() const;
  bool empty() const noexcept { return nodes_.empty(); }

 private:
  std::set<Sequence> nodes_;
};

/// Least k with the k-th derivative empty, by iterating derivative().
std::size_t order(const ExplicitTree& tree);
/// 1 + max over children, computed recursively from the root.
std::size_t order_recursive(const ExplicitTree& tree);

using BlockSeq = std::vector<FinSet>;

enum class Closure { explicit_tree, spreading };

/// A tree of successive block sequences given by generators.
///
/// explicit_tree: the members are the initial segments of the generators.
/// spreading: (B_1..B_j) is a member when some generator (A_1..A_k) has
/// indices i_1 < ... < i_j with |B_t| <= |A_{i_t}| and min B_t >= min A_{i_t}.
/// This is closed under subsequences, subsets of blocks and spreads.
/// A tree without generators is empty (it lacks even the empty sequence).
class BlockTree {
 public:
  /// Throws DomainError if a generator is not successive or has an empty block.
  BlockTree(std::vector<BlockSeq> generators, Closure closure);
  /// {"generators": [[[1],[2,3]], ...], "closure": "spreading" | "explicit"}
  static BlockTree from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// The spreading closure of the singleton-block sequences of `sets`.
  static BlockTree lift(std::span<const FinSet> sets);

  bool contains(const BlockSeq& s) const;
  bool empty() const noexcept { return generators_.empty(); }
  Closure closure() const noexcept { return closure_; }
  const std::vector<BlockSeq>& generators() const noexcept { return generators_; }
  /// max generator length + 1; 0 for the empty tree.
  std::size_t block_index() const;

 private:
  std::vector<BlockSeq> generators_;
  Closure closure_;
};

/// Members that have a one-block extension in the tree. Spreading trees only:
/// one extension there yields infinitely many by spreading. Explicit trees
/// are rejected with DomainError.
BlockTree block_derivative(const BlockTree& bt);

/// {{min B_1,...,min B_j} : (B_i) in bt} as a symbolic spreading family.
/// Spreading trees only.
Family min_family(const BlockTree& bt);

/// The compression restricted to [1..bound], as an explicit family without
/// downward closure. A bound is required for spreading trees.
Family compression(const BlockTree& bt, std::optional<Index> bound = std::nullopt);
inline Family min_set(const BlockTree& bt, std::optional<Index> bound = std::nullopt) {
  return compression(bt, bound);
}

struct InclusionReport {
  bool holds = false;
  std::size_t lhs_size = 0;  // members of (min G)^(2n+2) within the bound
  std::size_t rhs_size = 0;  // members of min(G^(n+1)) within the bound
  std::optional<FinSet> counterexample;
};

/// Materializes (min G)^{(2n+2)}_CB and min(G^{(n+1)}_bl) inside [1..bound]
/// and checks the inclusion.
InclusionReport inclusion_check(const BlockTree& bt, std::size_t n, Index bound);

struct WitnessReport {
  bool ok = true;
  std::optional<FinSet> failed_at;
  std::string reason;
};

/// Finite check of a witness family (x_F) for F in F_alpha \ {empty} inside
/// [1..bound]: every chain (x_{m1}, x_{m1,m2}, ..., x_F) must be in `target`,
/// and for non-maximal F the sequence (x_{F+{n}}), max F < n <= bound, must
/// satisfy `extension_pred`.
template <class Label, class Target, class Pred>
WitnessReport witness_verify(const Ordinal& alpha, const std::map<FinSet, Label>& witness, const Target& target,
                            Pred&& extension_pred, Index bound) {
  const Family fam = Family::fine_schreier(alpha);
  EnumerateOptions opts;
  opts.bound = bound;
  for (const FinSet& f : enumerate(fam, opts)) {
    if (f.empty()) continue;
    std::vector<Label> chain;
    for (std::size_t k = 1; k <= f.size(); ++k) {
      auto it = witness.find(f.prefix(k));
      if (it == witness.end()) return {false, f.prefix(k), "no witness for " + to_string(f.prefix(k))};
      chain.push_back(it->second);
    }
    if (!target.contains(chain)) return {false, f, "witnessed sequence is not in the target tree"};
  }
  for (const FinSet& f : enumerate(fam, opts)) {
    if (is_maximal(fam, f)) continue;
    std::vector<Label> extension;
    for (Index n = (f.empty() ? 0 : f.max()) + 1; n <= bound; ++n) {
      const FinSet g = f.with(n);
      if (!fam.contains(g)) continue;
      auto it = witness.find(g);
      if (it == witness.end()) return {false, g, "no witness for " + to_string(g)};
      extension.push_back(it->second);
    }
    if (!extension_pred(extension)) return {false, f, "extension sequence fails the predicate"};
  }
  return {};
}

/// x_F = {max F}: the witness for lifts of F_alpha.
std::map<FinSet, FinSet> identity_lift_witness(const Ordinal& alpha, Index bound);

}  // namespace schreier
