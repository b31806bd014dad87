#include "schreier/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "schreier/errors.hpp"

namespace schreier {

// ---------------------------------------------------------------------------
// Fine Schreier membership

namespace {

struct MemoKey {
  Ordinal alpha;
  FinSet set;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    return k.alpha.hash() * 31 + k.set.hash();
  }
};

class LimitMemo {
 public:
  std::optional<bool> find(const MemoKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(MemoKey key, bool value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> table_;
};

LimitMemo& limit_memo() {
  static LimitMemo memo;
  return memo;
}

// alpha = beta + k with beta zero or a limit.
std::pair<Ordinal, Integer> split_finite(const Ordinal& alpha) {
  if (!alpha.is_successor()) return {alpha, Integer(0)};
  auto terms = alpha.terms();
  Integer k = terms.back().coefficient;
  terms.pop_back();
  return {Ordinal::from_terms(std::move(terms)), k};
}

bool member_impl(Ordinal alpha, std::span<const Index> a) {
  while (true) {
    if (a.empty()) return true;
    if (alpha.is_zero()) return false;
    auto [beta, k] = split_finite(alpha);
    if (k > 0) {
      // Each successor step peels off the minimum.
      if (Integer(static_cast<unsigned long>(a.size())) <= k) return true;
      a = a.subspan(k.get_ui());
      alpha = std::move(beta);
      continue;
    }
    MemoKey key{alpha, FinSet::from_sorted(std::vector<Index>(a.begin(), a.end()))};
    if (auto hit = limit_memo().find(key)) return *hit;
    bool found = false;
    for (Index n = 1; n <= a.front() && !found; ++n)
      found = member_impl(fundamental_seq(alpha, n), a);
    limit_memo().insert(std::move(key), found);
    return found;
  }
}

}  // namespace

bool fs_member(const Ordinal& alpha, const FinSet& a) { return member_impl(alpha, a.elements()); }

bool schreier_member(const Ordinal& alpha, const FinSet& a) {
  if (alpha.is_zero()) throw DomainError("Schreier families are indexed from 1");
  return fs_member(omega_pow(alpha), a);
}

void clear_membership_memo() { limit_memo().clear(); }

// ---------------------------------------------------------------------------
// Family nodes

namespace detail {

bool FamilyNode::extendable(const FinSet& a, Index floor) const {
  if (!spreading()) throw DomainError("extension probe requires a spreading family: " + descriptor());
  const Index top = std::max({a.empty() ? Index{0} : a.max(), floor, threshold()});
  return contains(a.with(top + 1));
}

namespace {

class ResidualNode final : public FamilyNode {
 public:
  ResidualNode(Family base, FinSet prefix) : base_(std::move(base)), prefix_(std::move(prefix)) {}

  bool contains(const FinSet& b) const override {
    return precedes(prefix_, b) && base_.contains(prefix_.united(b));
  }
  bool extendable(const FinSet& b, Index floor) const override {
    return base_.extendable(prefix_.united(b), std::max(floor, prefix_.max()));
  }
  Index threshold() const override { return std::max(base_.threshold(), prefix_.max()); }
  bool spreading() const override { return base_.spreading(); }
  std::string descriptor() const override {
    return "residual(" + base_.descriptor() + "," + to_string(prefix_) + ")";
  }
  Family residual(const Family&, const FinSet& prefix) const override {
    return base_.node().residual(base_, prefix_.united(prefix));
  }

 private:
  Family base_;
  FinSet prefix_;
};

}  // namespace

Family FamilyNode::residual(const Family& self, const FinSet& prefix) const {
  if (prefix.empty()) return self;
  return Family(std::make_shared<ResidualNode>(self, prefix));
}

}  // namespace detail

namespace {

using detail::FamilyNode;

class FineSchreierNode final : public FamilyNode {
 public:
  explicit FineSchreierNode(Ordinal alpha) : alpha_(std::move(alpha)) {}

  bool contains(const FinSet& a) const override { return fs_member(alpha_, a); }
  bool spreading() const override { return true; }
  std::string descriptor() const override { return "fine(" + to_string(alpha_) + ")"; }

  Family residual(const Family& self, const FinSet& prefix) const override {
    if (prefix.empty()) return self;
    if (!fs_member(alpha_, prefix)) throw DomainError("prefix is not a member of " + descriptor());
    std::size_t budget = kSymbolicBudget;
    if (auto r = symbolic(alpha_, prefix, budget)) return *r;
    return FamilyNode::residual(self, prefix);
  }
  const Ordinal& alpha() const { return alpha_; }

 private:
  // Nodes a symbolic residual may create before falling back to the lazy
  // form; nested limits otherwise expand into min(prefix)^depth pieces.
  static constexpr std::size_t kSymbolicBudget = 64;

  static std::optional<Family> symbolic(Ordinal alpha, FinSet p, std::size_t& budget) {
    while (true) {
      if (budget == 0) return std::nullopt;
      --budget;
      if (alpha.is_successor()) {
        alpha = predecessor(alpha);
        FinSet rest = p.tail();
        if (rest.empty()) return Family::restriction(Family::fine_schreier(alpha), p.min());
        p = std::move(rest);
        continue;
      }
      std::vector<Family> parts;
      for (Index n = 1; n <= p.min(); ++n) {
        Ordinal step = fundamental_seq(alpha, n);
        if (!fs_member(step, p)) continue;
        auto part = symbolic(std::move(step), p, budget);
        if (!part) return std::nullopt;
        parts.push_back(std::move(*part));
      }
      return Family::union_of(std::move(parts));
    }
  }

  Ordinal alpha_;
};

class SchreierNode final : public FamilyNode {
 public:
  explicit SchreierNode(Ordinal alpha) : alpha_(alpha), fine_(Family::fine_schreier(omega_pow(alpha))) {}

  bool contains(const FinSet& a) const override { return fine_.contains(a); }
  bool spreading() const override { return true; }
  std::string descriptor() const override { return "schreier(" + to_string(alpha_) + ")"; }
  Family residual(const Family& self, const FinSet& prefix) const override {
    if (prefix.empty()) return self;
    return fine_.node().residual(fine_, prefix);
  }

 private:
  Ordinal alpha_;
  Family fine_;
};

class RestrictionNode final : public FamilyNode {
 public:
  RestrictionNode(Family base, Index bound) : base_(std::move(base)), bound_(bound) {}

  bool contains(const FinSet& a) const override {
    return (a.empty() || a.min() > bound_) && base_.contains(a);
  }
  bool extendable(const FinSet& a, Index floor) const override {
    return base_.extendable(a, std::max(floor, bound_));
  }
  Index threshold() const override { return std::max(base_.threshold(), bound_); }
  bool spreading() const override { return base_.spreading(); }
  std::string descriptor() const override {
    return "restrict(" + base_.descriptor() + "," + std::to_string(bound_) + ")";
  }
  Family residual(const Family& self, const FinSet& prefix) const override {
    if (prefix.empty()) return self;
    return base_.node().residual(base_, prefix);
  }

  const Family& base() const { return base_; }
  Index bound() const { return bound_; }

 private:
  Family base_;
  Index bound_;
};

class UnionNode final : public FamilyNode {
 public:
  explicit UnionNode(std::vector<Family> parts) : parts_(std::move(parts)) {}

  bool contains(const FinSet& a) const override {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Family& f) { return f.contains(a); });
  }
  bool extendable(const FinSet& a, Index floor) const override {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Family& f) { return f.contains(a) && f.extendable(a, floor); });
  }
  Index threshold() const override {
    Index t = 0;
    for (const auto& f : parts_) t = std::max(t, f.threshold());
    return t;
  }
  bool spreading() const override {
    return std::all_of(parts_.begin(), parts_.end(), [](const Family& f) { return f.spreading(); });
  }
  std::string descriptor() const override {
    if (parts_.empty()) return "empty";
    std::string out = "union[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += '|';
      out += parts_[i].descriptor();
    }
    return out + "]";
  }
  Family residual(const Family& self, const FinSet& prefix) const override {
    if (prefix.empty()) return self;
    std::vector<Family> out;
    for (const auto& f : parts_)
      if (f.contains(prefix)) out.push_back(f.node().residual(f, prefix));
    return Family::union_of(std::move(out));
  }

  const std::vector<Family>& parts() const { return parts_; }

 private:
  std::vector<Family> parts_;
};

// Downward-closed (when requested) trie keyed by increasing elements.
class ExplicitNode final : public FamilyNode {
 public:
  ExplicitNode(std::span<const FinSet> sets, bool close_downward) {
    nodes_.emplace_back();
    for (const auto& s : sets) {
      if (close_downward) {
        if (s.size() > 24) throw BudgetExceeded("downward closure of a set with more than 24 elements");
        const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
        for (std::uint64_t sub = 0; sub <= full; ++sub) {
          std::vector<Index> elems;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (sub >> i & 1U) elems.push_back(s[i]);
          insert(elems);
        }
      } else {
        insert(std::vector<Index>(s.begin(), s.end()));
      }
    }
  }

  bool contains(const FinSet& a) const override {
    std::uint32_t at = 0;
    for (Index e : a) {
      auto it = nodes_[at].children.find(e);
      if (it == nodes_[at].children.end()) return false;
      at = it->second;
    }
    return nodes_[at].terminal;
  }
  bool extendable(const FinSet& a, Index floor) const override {
    for (Index x : universe_)
      if (x > floor && !a.contains(x) && contains(a.with(x))) return true;
    return false;
  }
  Index threshold() const override { return universe_.empty() ? 0 : universe_.back(); }
  bool spreading() const override { return universe_.empty(); }
  std::string descriptor() const override {
    std::string out = "explicit{";
    bool first = true;
    for (const auto& m : members()) {
      if (!first) out += ';';
      first = false;
      out += to_string(m);
    }
    return out + "}";
  }

  std::vector<FinSet> members() const {
    std::vector<FinSet> out;
    std::vector<Index> path;
    walk(0, path, out);
    return out;
  }

 private:
  struct TrieNode {
    std::map<Index, std::uint32_t> children;
    bool terminal = false;
  };

  void insert(const std::vector<Index>& elems) {
    std::uint32_t at = 0;
    for (Index e : elems) {
      auto it = nodes_[at].children.find(e);
      if (it == nodes_[at].children.end()) {
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_[at].children.emplace(e, id);
        nodes_.emplace_back();
        at = id;
      } else {
        at = it->second;
      }
      auto u = std::lower_bound(universe_.begin(), universe_.end(), e);
      if (u == universe_.end() || *u != e) universe_.insert(u, e);
    }
    nodes_[at].terminal = true;
  }

  void walk(std::uint32_t at, std::vector<Index>& path, std::vector<FinSet>& out) const {
    if (nodes_[at].terminal) out.push_back(FinSet::from_sorted(path));
    for (const auto& [e, child] : nodes_[at].children) {
      path.push_back(e);
      walk(child, path, out);
      path.pop_back();
    }
  }

  std::vector<TrieNode> nodes_;
  std::vector<Index> universe_;
};

class DerivedNode final : public FamilyNode {
 public:
  explicit DerivedNode(Family base) : base_(std::move(base)) {}

  bool contains(const FinSet& a) const override { return base_.contains(a) && base_.extendable(a, 0); }
  // Each derivative may drop small singletons (S_1' has no {1}), so the
  // extension probe has to move one step further out.
  Index threshold() const override { return base_.threshold() + 1; }
  bool spreading() const override { return base_.spreading(); }
  std::string descriptor() const override { return "derived(" + base_.descriptor() + ")"; }

 private:
  Family base_;
};

}  // namespace

Family Family::fine_schreier(Ordinal alpha) { return Family(std::make_shared<FineSchreierNode>(std::move(alpha))); }

Family Family::schreier(Ordinal alpha) {
  if (alpha.is_zero()) throw DomainError("Schreier families are indexed from 1");
  return Family(std::make_shared<SchreierNode>(std::move(alpha)));
}

Family Family::explicit_sets(std::span<const FinSet> sets, bool close_downward) {
  return Family(std::make_shared<ExplicitNode>(sets, close_downward));
}

Family Family::restriction(Family base, Index bound) {
  if (const auto* r = dynamic_cast<const RestrictionNode*>(&base.node()))
    return restriction(r->base(), std::max(bound, r->bound()));
  return Family(std::make_shared<RestrictionNode>(std::move(base), bound));
}

Family Family::union_of(std::vector<Family> parts) {
  std::map<std::string, Family> unique;
  std::vector<Family> pending = std::move(parts);
  while (!pending.empty()) {
    Family f = std::move(pending.back());
    pending.pop_back();
    if (const auto* u = dynamic_cast<const UnionNode*>(&f.node())) {
      pending.insert(pending.end(), u->parts().begin(), u->parts().end());
      continue;
    }
    unique.emplace(f.descriptor(), std::move(f));
  }
  if (unique.size() == 1) return unique.begin()->second;
  std::vector<Family> flat;
  flat.reserve(unique.size());
  for (auto& [_, f] : unique) flat.push_back(std::move(f));
  return Family(std::make_shared<UnionNode>(std::move(flat)));
}

Family Family::empty() { return Family(std::make_shared<UnionNode>(std::vector<Family>{})); }

// ---------------------------------------------------------------------------
// Operations

bool is_maximal(const Family& fam, const FinSet& a) {
  if (!fam.contains(a)) throw DomainError("set " + to_string(a) + " is not a member of " + fam.descriptor());
  return !fam.extendable(a, 0);
}

std::vector<FinSet> enumerate(const Family& fam, const EnumerateOptions& opts) {
  if (opts.bound < 1) throw DomainError("enumeration bound must be >= 1");
  std::vector<FinSet> out;
  if (!fam.contains(FinSet{})) return out;
  std::size_t visited = 0;
  std::vector<FinSet> stack{FinSet{}};
  // Explicit stack visiting children in increasing order gives lexicographic output.
  while (!stack.empty()) {
    FinSet cur = std::move(stack.back());
    stack.pop_back();
    if (++visited > opts.budget) throw BudgetExceeded("enumeration budget exceeded");
    if (!opts.maximal_only || !fam.extendable(cur, 0)) out.push_back(cur);
    const Index start = cur.empty() ? 1 : cur.max() + 1;
    for (Index n = opts.bound; n >= start; --n) {
      FinSet next = cur.with(n);
      if (fam.contains(next)) stack.push_back(std::move(next));
    }
  }
  return out;
}

bool is_admissible(const Family& fam, std::span<const FinSet> blocks) {
  if (blocks.empty()) throw DomainError("admissibility needs at least one block");
  std::vector<Index> mins;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("admissible blocks must be non-empty");
    mins.push_back(b.min());
  }
  if (!is_successive(blocks)) return false;
  return fam.contains(FinSet::from_sorted(std::move(mins)));
}

Family residual(const Family& fam, const FinSet& prefix) {
  if (!fam.contains(prefix))
    throw DomainError("prefix " + to_string(prefix) + " is not a member of " + fam.descriptor());
  return fam.node().residual(fam, prefix);
}

StructureReport check_structure(const Family& fam, Index bound, std::size_t chain_cap) {
  if (bound < 1) throw DomainError("structure bound must be >= 1");
  if (bound > 20) throw BudgetExceeded("structure check is exhaustive; bound must be <= 20");
  StructureReport report{true, true, true};
  const std::uint64_t limit = std::uint64_t{1} << bound;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const FinSet a = FinSet::from_mask(mask);
    if (!fam.contains(a)) continue;
    if (report.hereditary) {
      for (Index x : a)
        if (!fam.contains(a.without(x))) {
          report.hereditary = false;
          break;
        }
    }
    if (report.spreading) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Index bumped = a[i] + 1;
        if (bumped > bound || (i + 1 < a.size() && bumped == a[i + 1])) continue;
        if (!fam.contains(a.without(a[i]).with(bumped))) {
          report.spreading = false;
          break;
        }
      }
    }
  }
  for (Index n = 1; n <= bound; ++n) {
    FinSet chain{n};
    std::size_t length = 1;
    while (fam.contains(chain)) {
      if (++length > chain_cap) throw BudgetExceeded("interval chain from " + std::to_string(n) + " exceeds cap");
      chain = chain.with(chain.max() + 1);
    }
  }
  return report;
}

Family cb_derivative(const Family& fam) {
  if (!fam.spreading()) throw DomainError("CB derivative requires a spreading family: " + fam.descriptor());
  return Family(std::make_shared<DerivedNode>(fam));
}

CbIndexResult cb_index_finite(const Family& fam, std::size_t budget) {
  Family current = fam;
  for (std::size_t k = 0; k <= budget; ++k) {
    if (current.is_empty()) return {k, budget};
    if (k == budget) break;
    current = cb_derivative(current);
  }
  return {std::nullopt, budget};
}

}  // namespace schreier
