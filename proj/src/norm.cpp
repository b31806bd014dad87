#include "schreier/norm.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "schreier/detail/residual_states.hpp"
#include "schreier/errors.hpp"

namespace schreier {

NormParams NormParams::make(Family family, Rational c) {
  c.canonicalize();
  if (c <= 0 || c >= 1) throw DomainError("norm parameter c must lie strictly between 0 and 1");
  return NormParams{std::move(family), std::move(c)};
}

NormParams NormParams::tsirelson(const Ordinal& alpha, Rational c) {
  return make(Family::schreier(alpha), std::move(c));
}

std::string NormParams::key() const { return family.descriptor() + "@" + to_string(c); }

std::size_t CertNode::depth() const {
  std::size_t d = 0;
  for (const auto& ch : children) d = std::max(d, ch.depth());
  return children.empty() ? 0 : d + 1;
}

namespace {

struct Choice {
  bool leaf = true;
  std::size_t leaf_pos = 0;
  std::size_t first_p = 0, first_q = 0;
  Index first_anchor = 0;
  int after_first = -1;  // state after the first anchor
};

struct TailEntry {
  bool valid = false;
  Rational value;
  std::size_t q = 0;
  Index anchor = 0;
  int next_state = -1;
};

class NormSolver {
 public:
  NormSolver(const NormParams& params, const SparseVec& x)
      : params_(params), states_(detail::ResidualStates::shared(params.family)), spreading_(params.family.spreading()) {
    for (const auto& [i, q] : x.entries()) {
      index_.push_back(i);
      abs_.push_back(abs(q));
    }
    m_ = index_.size();
    table_.assign(m_, std::vector<Rational>(m_));
    choice_.assign(m_, std::vector<Choice>(m_));
  }

  NormResult solve() {
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t l = r + 1; l-- > 0;) compute(l, r);
    }
    NormResult out;
    out.value = table_[0][m_ - 1];
    out.cert = build(0, m_ - 1, 0);
    return out;
  }

 private:
  // Integers allowed as the minimum of a block whose first support point is
  // position p, given that position `prev` (or nothing) precedes it.
  std::pair<Index, Index> gap(std::size_t p, bool first_in_interval) const {
    const Index hi = index_[p];
    if (spreading_) return {hi, hi};
    const Index lo = first_in_interval ? 1 : index_[p - 1] + 1;
    return {lo, hi};
  }

  void compute(std::size_t l, std::size_t r) {
    Choice& ch = choice_[l][r];
    std::size_t arg = l;
    for (std::size_t i = l + 1; i <= r; ++i)
      if (abs_[i] > abs_[arg]) arg = i;
    ch.leaf = true;
    ch.leaf_pos = arg;
    Rational inf = abs_[arg];
    table_[l][r] = inf;
    if (l == r) return;

    bool found = false;
    Rational best;
    for (std::size_t p1 = l; p1 <= r; ++p1) {
      const auto [lo, hi] = gap(p1, p1 == l);
      for (Index m = lo; m <= hi; ++m) {
        const int s = states_->step(states_->root(), m);
        if (s < 0) continue;
        for (std::size_t q1 = p1; q1 < r; ++q1) {
          const TailEntry& tail = tail_entry(r, q1 + 1, s);
          if (!tail.valid) continue;
          Rational cand = table_[p1][q1] + tail.value;
          if (!found || cand > best) {
            found = true;
            best = std::move(cand);
            ch.first_p = p1;
            ch.first_q = q1;
            ch.first_anchor = m;
            ch.after_first = s;
          }
        }
      }
    }
    if (found) {
      Rational damped = params_.c * best;
      if (damped > inf) {
        table_[l][r] = std::move(damped);
        ch.leaf = false;
      }
    }
  }

  // Best sum over decompositions of positions [p..r] into blocks, the first
  // starting at p, with minima admissible from state s.
  const TailEntry& tail_entry(std::size_t r, std::size_t p, int s) {
    const auto key = std::make_tuple(r, p, s);
    if (auto it = tails_.find(key); it != tails_.end()) return it->second;
    TailEntry e;
    const auto [lo, hi] = gap(p, false);
    for (Index m = lo; m <= hi; ++m) {
      const int next = states_->step(s, m);
      if (next < 0) continue;
      for (std::size_t q = p; q <= r; ++q) {
        Rational cand;
        if (q == r) {
          cand = table_[p][r];
        } else {
          const TailEntry& rest = tail_entry(r, q + 1, next);
          if (!rest.valid) continue;
          cand = table_[p][q] + rest.value;
        }
        if (!e.valid || cand > e.value) {
          e.valid = true;
          e.value = std::move(cand);
          e.q = q;
          e.anchor = m;
          e.next_state = next;
        }
      }
    }
    return tails_.emplace(key, std::move(e)).first->second;
  }

  FinSet block(std::size_t l, std::size_t r) const {
    return FinSet::from_sorted(std::vector<Index>(index_.begin() + static_cast<std::ptrdiff_t>(l),
                                                  index_.begin() + static_cast<std::ptrdiff_t>(r) + 1));
  }

  CertNode build(std::size_t l, std::size_t r, Index anchor) const {
    CertNode node;
    node.block = block(l, r);
    node.anchor = anchor;
    node.value = table_[l][r];
    const Choice& ch = choice_[l][r];
    if (ch.leaf) {
      node.leaf = index_[ch.leaf_pos];
      return node;
    }
    node.children.push_back(build(ch.first_p, ch.first_q, ch.first_anchor));
    std::size_t p = ch.first_q + 1;
    int s = ch.after_first;
    while (true) {
      const TailEntry& e = tails_.at(std::make_tuple(r, p, s));
      node.children.push_back(build(p, e.q, e.anchor));
      if (e.q == r) break;
      p = e.q + 1;
      s = e.next_state;
    }
    return node;
  }

  const NormParams& params_;
  std::shared_ptr<detail::ResidualStates> states_;
  bool spreading_;
  std::vector<Index> index_;
  std::vector<Rational> abs_;
  std::size_t m_ = 0;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::vector<Choice>> choice_;
  std::map<std::tuple<std::size_t, std::size_t, int>, TailEntry> tails_;
};

}  // namespace

NormResult norm(const NormParams& params, const SparseVec& x, const NormOptions& opts) {
  if (x.is_zero()) return NormResult{Rational(0), CertNode{}};
  if (x.support().max() > opts.support_cap)
    throw BudgetExceeded("support index " + std::to_string(x.support().max()) + " exceeds cap " +
                         std::to_string(opts.support_cap));
  return NormSolver(params, x).solve();
}

namespace {

Rational verify_node(const NormParams& params, const SparseVec& x, const CertNode& node, const std::string& path) {
  if (node.block.empty()) throw CertificateError(path, "empty block");
  Rational value;
  if (node.leaf) {
    if (!node.children.empty()) throw CertificateError(path, "leaf with children");
    if (!node.block.contains(*node.leaf)) throw CertificateError(path, "leaf index outside block");
    value = abs(x[*node.leaf]);
  } else {
    if (node.children.empty()) throw CertificateError(path, "internal node without children");
    std::vector<FinSet> admissible;
    Rational sum(0);
    for (std::size_t j = 0; j < node.children.size(); ++j) {
      const CertNode& child = node.children[j];
      const std::string child_path = path + "/" + std::to_string(j);
      if (child.block.empty() || !child.block.subset_of(node.block))
        throw CertificateError(child_path, "block not inside parent block");
      if (child.anchor == 0 || child.anchor > child.block.min())
        throw CertificateError(child_path, "anchor must be positive and at most the block minimum");
      admissible.push_back(child.block.with(child.anchor));
      sum += verify_node(params, x, child, child_path);
    }
    if (!is_admissible(params.family, admissible)) throw CertificateError(path, "decomposition is not admissible");
    value = params.c * sum;
  }
  if (value != node.value)
    throw CertificateError(path, "recorded value " + to_string(node.value) + " but evaluates to " + to_string(value));
  return value;
}

}  // namespace

Rational verify_certificate(const NormParams& params, const SparseVec& x, const PartitionCert& cert) {
  if (x.is_zero()) {
    if (!cert.block.empty() || !cert.children.empty() || cert.value != 0)
      throw CertificateError("root", "zero vector needs the trivial certificate");
    return Rational(0);
  }
  if (cert.block != x.support()) throw CertificateError("root", "root block must equal supp(x)");
  if (cert.depth() > x.support_size()) throw CertificateError("root", "tree deeper than the support size");
  return verify_node(params, x, cert, "root");
}

}  // namespace schreier
