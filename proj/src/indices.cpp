#include "schreier/indices.hpp"

#include <algorithm>

#include "schreier/errors.hpp"

namespace schreier {

ExplicitTree::ExplicitTree() { nodes_.insert(Sequence{}); }

ExplicitTree ExplicitTree::from_sequences(const std::vector<Sequence>& sequences) {
  ExplicitTree t;
  for (const auto& s : sequences)
    for (std::size_t k = 1; k <= s.size(); ++k) t.nodes_.insert(Sequence(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k)));
  return t;
}

ExplicitTree ExplicitTree::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sequences") || !j.at("sequences").is_array())
    throw ParseError("explicit tree needs a \"sequences\" array", 0);
  std::vector<Sequence> seqs;
  for (const auto& s : j.at("sequences")) {
    if (!s.is_array()) throw ParseError("each sequence must be an array", 0);
    Sequence seq;
    for (const auto& label : s) seq.push_back(label.is_string() ? label.get<std::string>() : label.dump());
    seqs.push_back(std::move(seq));
  }
  return from_sequences(seqs);
}

ExplicitTree ExplicitTree::derivative() const {
  ExplicitTree out;
  out.nodes_.clear();
  for (const auto& s : nodes_) {
    // Any extension of s sorts directly after s in lexicographic order.
    auto it = nodes_.upper_bound(s);
    if (it != nodes_.end() && it->size() > s.size() && std::equal(s.begin(), s.end(), it->begin()))
      out.nodes_.insert(s);
  }
  return out;
}

std::size_t order(const ExplicitTree& tree) {
  std::size_t k = 0;
  for (ExplicitTree t = tree; !t.empty(); t = t.derivative()) ++k;
  return k;
}

namespace {

std::size_t height_below(const std::set<ExplicitTree::Sequence>& nodes, const ExplicitTree::Sequence& s) {
  std::size_t best = 0;
  for (auto it = nodes.upper_bound(s); it != nodes.end(); ++it) {
    if (it->size() <= s.size() || !std::equal(s.begin(), s.end(), it->begin())) break;
    if (it->size() == s.size() + 1) best = std::max(best, height_below(nodes, *it));
  }
  return best + 1;
}

}  // namespace

std::size_t order_recursive(const ExplicitTree& tree) {
  if (tree.empty()) return 0;
  return height_below(tree.nodes(), {});
}

namespace {

bool successive(const BlockSeq& s) {
  for (const auto& b : s)
    if (b.empty()) return false;
  return is_successive(s);
}

// Earliest-index match of the blocks of `s` into generator `g`; returns the
// generator position of the last matched block (or -1 for the empty
// sequence), nullopt if no match exists.
std::optional<std::ptrdiff_t> greedy_match(const BlockSeq& g, const std::vector<std::pair<std::size_t, Index>>& s) {
  std::ptrdiff_t pos = -1;
  for (const auto& [size, min] : s) {
    std::size_t i = static_cast<std::size_t>(pos + 1);
    while (i < g.size() && (g[i].size() < size || g[i].min() > min)) ++i;
    if (i == g.size()) return std::nullopt;
    pos = static_cast<std::ptrdiff_t>(i);
  }
  return pos;
}

std::vector<std::pair<std::size_t, Index>> shape(const BlockSeq& s) {
  std::vector<std::pair<std::size_t, Index>> out;
  for (const auto& b : s) out.emplace_back(b.size(), b.min());
  return out;
}

std::string block_seq_text(const BlockSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ";" : "") + to_string(s[i]);
  return out + ")";
}

}  // namespace

BlockTree::BlockTree(std::vector<BlockSeq> generators, Closure closure) : closure_(closure) {
  for (const auto& g : generators)
    if (!successive(g)) throw DomainError("generator " + block_seq_text(g) + " is not a successive block sequence");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
}

BlockTree BlockTree::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators")) throw ParseError("block tree needs a \"generators\" array", 0);
  Closure closure = Closure::spreading;
  if (j.contains("closure")) {
    const std::string tag = j.at("closure").get<std::string>();
    if (tag == "explicit")
      closure = Closure::explicit_tree;
    else if (tag != "spreading")
      throw ParseError("closure must be \"spreading\" or \"explicit\"", 0);
  }
  std::vector<BlockSeq> gens;
  try {
    for (const auto& g : j.at("generators")) {
      BlockSeq seq;
      for (const auto& b : g) seq.push_back(FinSet::from_unsorted(b.get<std::vector<Index>>()));
      gens.push_back(std::move(seq));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed block tree: ") + e.what(), 0);
  }
  for (const auto& g : gens)
    for (const auto& b : g)
      if (!b.empty() && b.min() == 0) throw ParseError("block elements must be positive", 0);
  return BlockTree(std::move(gens), closure);
}

nlohmann::json BlockTree::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) {
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& b : g) seq.push_back(std::vector<Index>(b.begin(), b.end()));
    gens.push_back(std::move(seq));
  }
  return {{"generators", gens}, {"closure", closure_ == Closure::spreading ? "spreading" : "explicit"}};
}

BlockTree BlockTree::lift(std::span<const FinSet> sets) {
  std::vector<BlockSeq> gens;
  for (const auto& f : sets) {
    BlockSeq seq;
    for (Index i : f) seq.push_back(FinSet{i});
    gens.push_back(std::move(seq));
  }
  return BlockTree(std::move(gens), Closure::spreading);
}

bool BlockTree::contains(const BlockSeq& s) const {
  if (!successive(s)) return false;
  if (closure_ == Closure::explicit_tree) {
    for (const auto& g : generators_)
      if (g.size() >= s.size() && std::equal(s.begin(), s.end(), g.begin())) return true;
    return false;
  }
  const auto sh = shape(s);
  for (const auto& g : generators_)
    if (greedy_match(g, sh)) return true;
  return false;
}

std::size_t BlockTree::block_index() const {
  std::size_t len = 0;
  if (generators_.empty()) return 0;
  for (const auto& g : generators_) len = std::max(len, g.size());
  return len + 1;
}

BlockTree block_derivative(const BlockTree& bt) {
  if (bt.closure() != Closure::spreading)
    throw DomainError("block derivative needs a spreading-closure tree; a finite explicit tree has no infinite extensions");
  // The earliest match minimizes the last used position, so a member has an
  // extension iff it matches a generator with its last block removed.
  std::vector<BlockSeq> gens;
  for (const auto& g : bt.generators())
    if (!g.empty()) gens.emplace_back(g.begin(), g.end() - 1);
  return BlockTree(std::move(gens), Closure::spreading);
}

namespace {

class MinSetNode final : public detail::FamilyNode {
 public:
  explicit MinSetNode(const BlockTree& bt) {
    for (const auto& g : bt.generators()) {
      std::vector<Index> mins;
      for (const auto& b : g) {
        mins.push_back(b.min());
        threshold_ = std::max(threshold_, b.min());
      }
      minima_.push_back(std::move(mins));
    }
    std::sort(minima_.begin(), minima_.end());
    minima_.erase(std::unique(minima_.begin(), minima_.end()), minima_.end());
  }

  // Singletons realize any min-set, and block sizes are then irrelevant.
  bool contains(const FinSet& a) const override {
    for (const auto& g : minima_) {
      std::size_t i = 0;
      bool ok = true;
      for (Index m : a) {
        if (i == g.size() || g[i] > m) {
          ok = false;
          break;
        }
        ++i;
      }
      if (ok) return true;
    }
    return false;
  }
  Index threshold() const override { return threshold_; }
  bool spreading() const override { return true; }
  std::string descriptor() const override {
    std::string out = "minset[";
    for (std::size_t i = 0; i < minima_.size(); ++i) {
      out += i ? "|" : "";
      for (std::size_t j = 0; j < minima_[i].size(); ++j) out += (j ? "," : "") + std::to_string(minima_[i][j]);
    }
    return out + "]";
  }

 private:
  std::vector<std::vector<Index>> minima_;
  Index threshold_ = 0;
};

}  // namespace

Family min_family(const BlockTree& bt) {
  if (bt.closure() != Closure::spreading) throw DomainError("symbolic min-set family needs a spreading-closure tree");
  if (bt.empty()) return Family::empty();
  return Family(std::make_shared<MinSetNode>(bt));
}

Family compression(const BlockTree& bt, std::optional<Index> bound) {
  std::vector<FinSet> sets;
  if (bt.closure() == Closure::explicit_tree) {
    for (const auto& g : bt.generators()) {
      std::vector<Index> mins;
      sets.push_back(FinSet{});
      for (const auto& b : g) {
        if (bound && b.max() > *bound) break;
        mins.push_back(b.min());
        sets.push_back(FinSet::from_sorted(mins));
      }
    }
    return Family::explicit_sets(sets, false);
  }
  if (!bound) throw DomainError("compression of a spreading-closure tree needs a bound");
  EnumerateOptions opts;
  opts.bound = *bound;
  sets = enumerate(min_family(bt), opts);
  return Family::explicit_sets(sets, false);
}

InclusionReport inclusion_check(const BlockTree& bt, std::size_t n, Index bound) {
  if (bt.closure() != Closure::spreading) throw DomainError("the inclusion check needs a spreading-closure tree");
  InclusionReport report;
  report.holds = true;
  Family lhs = min_family(bt);
  for (std::size_t k = 0; k < 2 * n + 2; ++k) lhs = cb_derivative(lhs);
  BlockTree g = bt;
  for (std::size_t k = 0; k < n + 1; ++k) g = block_derivative(g);
  const Family rhs = min_family(g);
  EnumerateOptions opts;
  opts.bound = bound;
  const auto lhs_sets = enumerate(lhs, opts);
  report.lhs_size = lhs_sets.size();
  report.rhs_size = enumerate(rhs, opts).size();
  for (const auto& a : lhs_sets) {
    if (!rhs.contains(a)) {
      report.holds = false;
      report.counterexample = a;
      break;
    }
  }
  return report;
}

std::map<FinSet, FinSet> identity_lift_witness(const Ordinal& alpha, Index bound) {
  std::map<FinSet, FinSet> out;
  EnumerateOptions opts;
  opts.bound = bound;
  for (const auto& f : enumerate(Family::fine_schreier(alpha), opts))
    if (!f.empty()) out.emplace(f, FinSet{f.max()});
  return out;
}

}  // namespace schreier
