#pragma once

#include <cstddef>
#include <vector>

#include "schreier/rational.hpp"

namespace schreier::lp {

/// Dense column-major constraint data for  min c^T x  s.t.  A x = b, x >= 0.
struct StandardForm {
  std::size_t rows = 0;
  std::vector<std::vector<Rational>> columns;  // each of length `rows`
  std::vector<Rational> cost;                  // one per column
  std::vector<Rational> rhs;                   // length `rows`
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> primal;  // one per column
  std::vector<Rational> dual;    // one per row; c - A^T y >= 0 at optimum
};

/// Two-phase tableau simplex in exact arithmetic with Bland's rule.
Solution solve(const StandardForm& problem);

}  // namespace schreier::lp
