#include "schreier/functionals.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "schreier/detail/residual_states.hpp"
#include "schreier/errors.hpp"
#include "schreier/lp.hpp"

namespace schreier {

bool FunctionalSet::contains(const SparseVec& f) const {
  const std::string key = to_string(f);
  auto it = std::lower_bound(members_.begin(), members_.end(), key,
                             [](const Functional& m, const std::string& k) { return to_string(m.f) < k; });
  return it != members_.end() && it->f == f;
}

namespace {

class Generator {
 public:
  Generator(const NormParams& params, std::map<std::string, Functional>& out, std::size_t depth,
            std::size_t budget)
      : params_(params), out_(out), depth_(depth), budget_(budget) {}

  void run(const std::vector<SparseVec>& previous) {
    by_min_.clear();
    for (const auto& f : previous) by_min_[f.support().min()].push_back(&f);
    extend(SparseVec{}, 0, FinSet{}, 0);
  }

 private:
  void extend(const SparseVec& sum, Index last_max, const FinSet& minima, std::size_t count) {
    for (auto it = by_min_.upper_bound(last_max); it != by_min_.end(); ++it) {
      const FinSet next_minima = minima.with(it->first);
      if (!params_.family.contains(next_minima)) continue;
      for (const SparseVec* f : it->second) {
        const SparseVec next = sum + *f;
        if (count + 1 >= 2) emit(next.scaled(params_.c));
        extend(next, f->support().max(), next_minima, count + 1);
      }
    }
  }

  void emit(SparseVec f) {
    std::string key = to_string(f);
    if (out_.count(key)) return;
    if (out_.size() >= budget_)
      throw BudgetExceeded("norming set exceeds " + std::to_string(budget_) + " functionals");
    out_.emplace(std::move(key), Functional{std::move(f), depth_});
  }

  const NormParams& params_;
  std::map<std::string, Functional>& out_;
  std::size_t depth_;
  std::size_t budget_;
  std::map<Index, std::vector<const SparseVec*>> by_min_;
};

}  // namespace

FunctionalSet norming_set(const NormParams& params, Index bound, std::size_t depth, std::size_t budget) {
  std::map<std::string, Functional> all;
  for (Index i = 1; i <= bound; ++i) {
    for (int sign : {1, -1}) {
      SparseVec e;
      e.set(i, Rational(sign));
      all.emplace(to_string(e), Functional{e, 0});
    }
  }
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<SparseVec> previous;
    previous.reserve(all.size());
    for (const auto& [key, m] : all) previous.push_back(m.f);
    const std::size_t before = all.size();
    Generator(params, all, d, budget).run(previous);
    if (all.size() == before) break;  // fixed point: deeper levels add nothing
  }
  FunctionalSet out;
  out.bound_ = bound;
  out.depth_ = depth;
  out.members_.reserve(all.size());
  for (auto& [key, m] : all) out.members_.push_back(std::move(m));
  return out;
}

namespace {

// phi[d](m, h): best <f,x> over f in K_d with min supp f = m and max supp f <= h.
class FunctionalRecursion {
 public:
  FunctionalRecursion(const NormParams& params, const SparseVec& x)
      : params_(params), states_(detail::ResidualStates::shared(params.family)), bound_(x.support().max()) {
    abs_.assign(bound_ + 1, Rational(0));
    for (const auto& [i, q] : x.entries()) abs_[i] = abs(q);
  }

  Rational solve(std::size_t depth) {
    Table phi(bound_ + 2, std::vector<Rational>(bound_ + 2));
    for (Index m = 1; m <= bound_; ++m)
      for (Index h = m; h <= bound_; ++h) phi[m][h] = abs_[m];
    for (std::size_t d = 1; d <= depth; ++d) {
      tails_.clear();
      Table next = phi;
      bool changed = false;
      for (Index m = 1; m <= bound_; ++m) {
        const int s1 = states_->step(states_->root(), m);
        if (s1 < 0) continue;
        for (Index h = m + 1; h <= bound_; ++h) {
          std::optional<Rational> best;
          for (Index m2 = m + 1; m2 <= h; ++m2) {
            const int s2 = states_->step(s1, m2);
            if (s2 < 0) continue;
            Rational cand = phi[m][m2 - 1] + tail(phi, s2, m2, h);
            if (!best || cand > *best) best = std::move(cand);
          }
          if (!best) continue;
          Rational damped = params_.c * *best;
          if (damped > next[m][h]) {
            next[m][h] = std::move(damped);
            changed = true;
          }
        }
      }
      phi = std::move(next);
      if (!changed) break;  // later levels reuse the same table
    }
    Rational out(0);
    for (Index m = 1; m <= bound_; ++m) out = std::max(out, phi[m][bound_]);
    return out;
  }

 private:
  using Table = std::vector<std::vector<Rational>>;

  // Best sum of the functionals from the one with minimum m onwards, all
  // supports <= h, with m already recorded in state s.
  const Rational& tail(const Table& phi, int s, Index m, Index h) {
    const auto key = std::make_tuple(s, m, h);
    if (auto it = tails_.find(key); it != tails_.end()) return it->second;
    Rational best = phi[m][h];
    for (Index m2 = m + 1; m2 <= h; ++m2) {
      const int s2 = states_->step(s, m2);
      if (s2 < 0) continue;
      Rational cand = phi[m][m2 - 1] + tail(phi, s2, m2, h);
      if (cand > best) best = std::move(cand);
    }
    return tails_.emplace(key, std::move(best)).first->second;
  }

  const NormParams& params_;
  std::shared_ptr<detail::ResidualStates> states_;
  Index bound_;
  std::vector<Rational> abs_;
  std::map<std::tuple<int, Index, Index>, Rational> tails_;
};

}  // namespace

Rational norm_via_functionals(const NormParams& params, const SparseVec& x, std::size_t depth) {
  if (x.is_zero()) return Rational(0);
  return FunctionalRecursion(params, x).solve(depth);
}

Rational norm_via_functionals(const FunctionalSet& set, const SparseVec& x) {
  if (!x.is_zero() && x.support().max() > set.bound())
    throw DomainError("vector support exceeds the functional set bound");
  Rational best(0);
  for (const auto& m : set.members()) best = std::max(best, dot(m.f, x));
  return best;
}

DualNormResult dual_norm(const FunctionalSet& set, const SparseVec& g) {
  if (!g.is_zero() && g.support().max() > set.bound())
    throw DomainError("functional support exceeds the norming set bound");
  const Index rows = set.bound();
  lp::StandardForm master;
  master.rows = rows;
  master.rhs.assign(rows, Rational(0));
  for (const auto& [i, q] : g.entries()) master.rhs[i - 1] = q;

  std::vector<const SparseVec*> columns;
  auto add_column = [&](const SparseVec& f) {
    std::vector<Rational> col(rows);
    for (const auto& [i, q] : f.entries()) col[i - 1] = q;
    master.columns.push_back(std::move(col));
    master.cost.emplace_back(1);
    columns.push_back(&f);
  };
  // Start from the unit functionals, which make the master feasible.
  for (const auto& m : set.members())
    if (m.depth == 0) add_column(m.f);

  while (true) {
    const lp::Solution sol = lp::solve(master);
    if (sol.status != lp::Status::optimal) throw DomainError("dual norm LP did not reach an optimum");
    SparseVec y;
    for (Index i = 0; i < rows; ++i) y.set(i + 1, sol.dual[i]);
    const SparseVec* entering = nullptr;
    Rational best(1);
    for (const auto& m : set.members()) {
      Rational v = dot(m.f, y);
      if (v > best) {
        best = std::move(v);
        entering = &m.f;
      }
    }
    if (!entering) {
      DualNormResult out;
      out.value = sol.objective;
      out.dual_witness = std::move(y);
      for (std::size_t j = 0; j < columns.size(); ++j)
        if (sol.primal[j] != 0) out.decomposition.emplace_back(*columns[j], sol.primal[j]);
      return out;
    }
    add_column(*entering);
  }
}

DualNormResult dual_norm(const NormParams& params, const SparseVec& g, Index bound, std::size_t depth) {
  return dual_norm(norming_set(params, bound, depth), g);
}

}  // namespace schreier
