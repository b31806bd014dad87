#include "schreier/lp.hpp"

#include <optional>

#include "schreier/errors.hpp"

namespace schreier::lp {

namespace {

// Tableau over structural columns followed by one artificial per row.
class Tableau {
 public:
  explicit Tableau(const StandardForm& p) : m_(p.rows), n_(p.columns.size()) {
    width_ = n_ + m_;
    t_.assign(m_, std::vector<Rational>(width_ + 1));
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.rhs[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] * p.columns[j][i];
      t_[i][n_ + i] = 1;
      t_[i][width_] = sign_[i] * p.rhs[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    active_.assign(m_, true);
  }

  // Minimizes the given cost over the columns allowed to enter.
  Status optimize(const std::vector<Rational>& cost, std::size_t enter_limit) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enter_limit && !entering; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) < 0) entering = j;
      }
      if (!entering) return Status::optimal;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || t_[i][e] <= 0) continue;
        Rational ratio = t_[i][width_] / t_[i][e];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return Status::unbounded;
      pivot(*leave, e);
    }
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && t_[i][j] != 0) r -= cost[basis_[i]] * t_[i][j];
    return r;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational z(0);
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i]) z += cost[basis_[i]] * t_[i][width_];
    return z;
  }

  // Pivots artificials out of the basis; rows where that is impossible are
  // redundant and get deactivated.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j)
        if (!is_basic(j) && t_[i][j] != 0) col = j;
      if (col)
        pivot(i, *col);
      else
        active_[i] = false;
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = t_[i][width_];
    return x;
  }

  // y_i from the artificial columns, which hold B^{-1} applied to the
  // sign-adjusted unit vectors.
  std::vector<Rational> dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      Rational v(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (active_[i]) v += cost[basis_[i]] * t_[i][n_ + r];
      y[r] = sign_[r] * v;
    }
    return y;
  }

  std::size_t structural() const { return n_; }
  std::size_t width() const { return width_; }

 private:
  bool is_basic(std::size_t j) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] == j) return true;
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t m_, n_, width_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

Solution solve(const StandardForm& problem) {
  if (problem.cost.size() != problem.columns.size() || problem.rhs.size() != problem.rows)
    throw DomainError("inconsistent LP dimensions");
  for (const auto& col : problem.columns)
    if (col.size() != problem.rows) throw DomainError("LP column has wrong length");

  Tableau tab(problem);
  const std::size_t n = tab.structural();
  std::vector<Rational> phase1(tab.width());
  for (std::size_t j = n; j < tab.width(); ++j) phase1[j] = 1;
  tab.optimize(phase1, tab.width());
  Solution out;
  if (tab.objective(phase1) != 0) {
    out.status = Status::infeasible;
    return out;
  }
  tab.expel_artificials();
  std::vector<Rational> phase2(tab.width());
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.cost[j];
  out.status = tab.optimize(phase2, n);
  if (out.status != Status::optimal) return out;
  out.objective = tab.objective(phase2);
  out.primal = tab.primal();
  out.dual = tab.dual(phase2);
  return out;
}

}  // namespace schreier::lp
