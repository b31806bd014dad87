#include "schreier/estimates.hpp"

#include <random>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

class Search {
 public:
  Search(const NormParams& u, const NormParams& v, std::size_t budget) : u_(u), v_(v), budget_(budget) {}

  bool exhausted() const { return result_.evaluations >= budget_; }

  void consider(const SparseVec& x) {
    if (x.is_zero() || exhausted()) return;
    ++result_.evaluations;
    const Rational ratio = norm_value(u_, x) / norm_value(v_, x);
    if (result_.witness.is_zero() || ratio > result_.lower_bound) {
      result_.lower_bound = ratio;
      result_.witness = x;
    }
  }

  // Entries in {-1, 1} on every subset of exactly `size` indices from [1..bound].
  void scan(Index bound, std::size_t size, SparseVec& x, Index from) {
    if (exhausted()) return;
    if (x.support_size() == size) {
      consider(x);
      return;
    }
    for (Index i = from; i <= bound; ++i) {
      for (int sign : {1, -1}) {
        x.set(i, Rational(sign));
        scan(bound, size, x, i + 1);
        x.set(i, Rational(0));
      }
    }
  }

  void refine() {
    static const Rational factors[] = {Rational(2), Rational(1, 2), Rational(3, 2), Rational(2, 3)};
    bool improved = true;
    while (improved && !exhausted()) {
      improved = false;
      const SparseVec base = result_.witness;
      const Rational before = result_.lower_bound;
      for (const auto& [i, q] : base.entries()) {
        for (const auto& f : factors) {
          SparseVec y = base;
          y.set(i, q * f);
          consider(y);
        }
      }
      improved = result_.lower_bound > before;
    }
  }

  DominationResult take() { return std::move(result_); }

 private:
  const NormParams& u_;
  const NormParams& v_;
  std::size_t budget_;
  DominationResult result_;
};

}  // namespace

DominationResult domination_search(const NormParams& u, const NormParams& v, Index bound,
                                   std::size_t budget) {
  Search search(u, v, budget);
  SparseVec x;
  for (std::size_t size = 1; size <= bound && !search.exhausted(); ++size) search.scan(bound, size, x, 1);
  search.refine();
  return search.take();
}

bool check_unconditional(const NormParams& params, const SparseVec& x) {
  const std::size_t k = x.support_size();
  if (k > 12) throw BudgetExceeded("sign exhaustion is limited to 12 support points");
  const Rational reference = norm_value(params, x);
  const FinSet support = x.support();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    SparseVec y = x;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) y.set(support[j], -x[support[j]]);
    if (norm_value(params, y) != reference) return false;
  }
  return true;
}

SparseVec apply_spread(const SparseVec& x, const std::map<Index, Index>& spread) {
  SparseVec y;
  std::optional<Index> last;
  for (const auto& [i, q] : x.entries()) {
    auto it = spread.find(i);
    if (it == spread.end()) throw DomainError("spread map undefined at " + std::to_string(i));
    const Index m = it->second;
    if (m < i) throw DomainError("spread map must satisfy m(i) >= i");
    if (last && m <= *last) throw DomainError("spread map must be increasing");
    last = m;
    y.set(m, q);
  }
  return y;
}

bool check_right_dominant(const NormParams& params, const SparseVec& x,
                          const std::map<Index, Index>& spread) {
  return norm_value(params, x) <= norm_value(params, apply_spread(x, spread));
}

L1Check check_l1_lower(const Ordinal& alpha, std::uint64_t n, const FinSet& f,
                       const std::vector<Rational>& coeffs) {
  if (coeffs.size() != f.size()) throw DomainError("one coefficient per element of F is required");
  const Ordinal order = mul(alpha, Ordinal::natural(n));
  if (order.is_zero() || !schreier_member(order, f))
    throw DomainError("F is not a member of S_" + to_string(order));
  SparseVec x;
  Rational l1(0);
  for (std::size_t j = 0; j < f.size(); ++j) {
    x.set(f[j], coeffs[j]);
    l1 += abs(coeffs[j]);
  }
  L1Check out;
  out.norm = norm(NormParams::tsirelson(alpha), x);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n));
  out.lower = l1 / Rational(scale);
  out.holds = out.norm.value >= out.lower;
  return out;
}

Rational inverse_root_two(std::uint64_t n) {
  if (n == 0) throw DomainError("root order must be positive");
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 10, 10);
  Integer radicand;
  mpz_ui_pow_ui(radicand.get_mpz_t(), 10, static_cast<unsigned long>(10 * n));
  radicand /= 2;
  Integer k;
  mpz_root(k.get_mpz_t(), radicand.get_mpz_t(), static_cast<unsigned long>(n));
  Rational c(k, denom);
  c.canonicalize();
  return c;
}

EquivalenceReport equivalence_sample(const Ordinal& alpha, std::uint64_t n, Index bound,
                                     std::size_t samples, std::uint64_t seed) {
  EquivalenceReport report;
  report.c = inverse_root_two(n);
  if (samples == 0) return report;
  const NormParams up = NormParams::tsirelson(mul(alpha, Ordinal::natural(n)));
  const NormParams down = NormParams::tsirelson(alpha, report.c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> index(1, bound);
  std::uniform_int_distribution<int> numer(-6, 6), denom(1, 4);
  std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(bound, 8));
  for (std::size_t s = 0; s < samples; ++s) {
    SparseVec x;
    const std::size_t k = size(rng);
    while (x.support_size() < k) {
      const int p = numer(rng);
      x.set(index(rng), Rational(p == 0 ? 1 : p, denom(rng)));
    }
    RatioSample sample{x, norm_value(up, x), norm_value(down, x)};
    const Rational r_up = sample.upper / sample.lower;
    const Rational r_down = sample.lower / sample.upper;
    if (!report.max_ratio_up || r_up > *report.max_ratio_up) {
      report.max_ratio_up = r_up;
      report.witness_up = sample;
    }
    if (!report.max_ratio_down || r_down > *report.max_ratio_down) {
      report.max_ratio_down = r_down;
      report.witness_down = sample;
    }
    ++report.samples;
  }
  return report;
}

}  // namespace schreier
