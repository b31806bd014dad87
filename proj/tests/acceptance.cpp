// Acceptance gate: one PASS/FAIL line per criterion. Sizes and time limits
// are fixed here; a criterion over its time limit fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "schreier/errors.hpp"
#include "schreier/estimates.hpp"
#include "schreier/functionals.hpp"
#include "schreier/indices.hpp"
#include "schreier/oracle.hpp"
#include "schreier/sampling.hpp"

using namespace schreier;
using sampling::Rng;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

// Every norm emitted by criteria 3-5, for the soundness pass.
struct Emitted {
  NormParams params;
  SparseVec x;
  NormResult result;
};
std::vector<Emitted> emitted;

NormResult recorded_norm(const NormParams& p, const SparseVec& x) {
  NormResult r = norm(p, x);
  emitted.push_back({p, x, r});
  return r;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- 1 ----
Verdict closed_forms() {
  for (unsigned k = 0; k <= 6; ++k)
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
      const FinSet a = FinSet::from_mask(mask);
      if (fs_member(Ordinal::natural(k), a) != (a.size() <= k))
        return {false, fmt("F_%u disagrees at %s", k, to_string(a).c_str())};
    }
  for (std::uint32_t mask = 0; mask < (1u << 14); ++mask) {
    const FinSet a = FinSet::from_mask(mask);
    if (schreier_member(Ordinal::natural(1), a) != (a.empty() || a.size() <= a.min()))
      return {false, "S_1 disagrees at " + to_string(a)};
  }
  return {true, "F_k (k<=6) over all subsets of [1..12], S_1 over all subsets of [1..14]"};
}

// ---- 2 ----
Verdict cb_indices() {
  std::string got;
  bool ok = true;
  for (unsigned k = 0; k <= 6; ++k) {
    const CbIndexResult r = cb_index_finite(Family::fine_schreier(Ordinal::natural(k)), 16);
    ok = ok && r.index && *r.index == k + 1;
    got += (k ? " " : "") + (r.index ? std::to_string(*r.index) : std::string("?"));
  }
  return {ok, "cb_index(F_0..F_6) = " + got};
}

// ---- 3 ----
Verdict triple_agreement() {
  std::vector<NormParams> params;
  for (const Rational& c : {Rational(1, 2), Rational(2, 3)}) {
    params.push_back(NormParams::tsirelson(Ordinal::natural(1), c));
    params.push_back(NormParams::tsirelson(Ordinal::natural(2), c));
    params.push_back(NormParams::make(Family::fine_schreier(Ordinal::natural(5)), c));
    params.push_back(NormParams::make(Family::fine_schreier(Ordinal::omega()), c));
  }
  Rng rng(3003);
  std::size_t count = 0, largest = 0;
  for (const auto& p : params)
    for (int i = 0; i < 63; ++i) {
      const SparseVec x = sampling::vector_weighted(rng, 10);
      const Rational dp = recorded_norm(p, x).value;
      const Rational enumerated = oracle::partition_enumeration_norm(p, x);
      const Rational functional = norm_via_functionals(p, x, x.support_size());
      if (dp != enumerated || dp != functional)
        return {false, fmt("%s x=%s dp=%s enum=%s functionals=%s", p.key().c_str(), to_string(x).c_str(),
                           to_string(dp).c_str(), to_string(enumerated).c_str(), to_string(functional).c_str())};
      ++count;
      largest = std::max(largest, x.support_size());
    }
  return {count >= 500, fmt("%zu vectors over 8 (family, c) pairs, support sizes up to %zu, exact equality", count, largest)};
}

// ---- 4 ----
FinSet random_member(Rng& rng, const Family& fam, Index bound) {
  while (true) {
    const Index lo = sampling::uniform(rng, 1, bound);
    const Index keep = sampling::uniform(rng, 1, 4);  // density keep/4
    std::vector<Index> a;
    for (Index i = lo; i <= bound; ++i)
      if (sampling::uniform(rng, 1, 4) <= keep) a.push_back(i);
    FinSet f = FinSet::from_sorted(std::move(a));
    while (!f.empty() && !fam.contains(f)) f = f.without(f.max());
    if (!f.empty()) return f;
  }
}

Verdict l1_lower() {
  Rng rng(4004);
  std::size_t count = 0, tight = 0;
  for (std::uint64_t n : {1, 2}) {
    const Family fam = Family::schreier(Ordinal::natural(n));
    for (int i = 0; i < 100; ++i) {
      const FinSet f = random_member(rng, fam, 12);
      std::vector<Rational> a;
      for (std::size_t j = 0; j < f.size(); ++j) a.push_back(sampling::nonzero_rational(rng));
      const L1Check r = check_l1_lower(Ordinal::natural(1), n, f, a);
      SparseVec x;
      for (std::size_t j = 0; j < f.size(); ++j) x.set(f[j], a[j]);
      emitted.push_back({NormParams::tsirelson(Ordinal::natural(1)), x, r.norm});
      if (!r.holds)
        return {false, fmt("n=%llu F=%s norm %s < %s", static_cast<unsigned long long>(n), to_string(f).c_str(),
                           to_string(r.norm.value).c_str(), to_string(r.lower).c_str())};
      ++count;
      tight += r.norm.value == r.lower;
    }
  }
  return {count >= 200, fmt("%zu cases (n=1,2), %zu attain equality", count, tight)};
}

// ---- 5 ----
Verdict basis_properties() {
  Rng rng(5005);
  const std::vector<NormParams> params = {NormParams::tsirelson(Ordinal::natural(1)),
                                          NormParams::tsirelson(Ordinal::natural(2), Rational(2, 3))};
  std::size_t sign_vectors = 0, patterns = 0;
  for (const auto& p : params)
    for (int i = 0; i < 40; ++i) {
      const SparseVec x = sampling::vector_weighted(rng, 10);
      const Rational ref = recorded_norm(p, x).value;
      const FinSet s = x.support();
      for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
        SparseVec y = x;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (mask & (1u << j)) y.set(s[j], -x[s[j]]);
        ++patterns;
        if (recorded_norm(p, y).value != ref) return {false, p.key() + " sign pattern changes the norm of " + to_string(x)};
      }
      ++sign_vectors;
    }
  // The same on the signed norming functionals directly.
  const FunctionalSet k = norming_set(params[0], 6, 6);
  for (int i = 0; i < 30; ++i) {
    const SparseVec x = sampling::vector(rng, 6, 6);
    const Rational ref = norm_via_functionals(k, x);
    const FinSet s = x.support();
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      SparseVec y = x;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (mask & (1u << j)) y.set(s[j], -x[s[j]]);
      if (norm_via_functionals(k, y) != ref) return {false, "functional supremum not sign invariant at " + to_string(x)};
    }
  }
  std::size_t spreads = 0;
  for (int i = 0; i < 220; ++i) {
    const NormParams& p = params[static_cast<std::size_t>(i) % 2];
    const SparseVec x = sampling::vector_weighted(rng, 10);
    const auto m = sampling::spread(rng, x.support(), 5);
    const Rational before = recorded_norm(p, x).value;
    const Rational after = recorded_norm(p, apply_spread(x, m)).value;
    if (before > after) return {false, p.key() + " spread lowers the norm of " + to_string(x)};
    ++spreads;
  }
  return {spreads >= 200, fmt("%zu vectors x %zu sign patterns, 30 functional checks, %zu spreads", sign_vectors, patterns,
                              spreads)};
}

// ---- 6 ----
Verdict ordinal_algebra() {
  Rng rng(6006);
  std::size_t count = 0;
  for (int i = 0; i < 1200; ++i) {
    Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3);
    const Ordinal c = sampling::ordinal(rng, 3);
    if (natural_sum(a, b) != natural_sum(b, a)) return {false, "not commutative: " + to_string(a) + ", " + to_string(b)};
    if (natural_sum(natural_sum(a, b), c) != natural_sum(a, natural_sum(b, c)))
      return {false, "not associative: " + to_string(a) + ", " + to_string(b) + ", " + to_string(c)};
    if (natural_sum(a, b) < add(a, b)) return {false, "below ordinal sum: " + to_string(a) + ", " + to_string(b)};
    if (b < a) std::swap(a, b);
    if (a < b && !(natural_sum(a, c) < natural_sum(b, c)))
      return {false, "not monotone: " + to_string(a) + ", " + to_string(b) + ", " + to_string(c)};
    ++count;
  }
  for (std::uint64_t n = 1; n <= 1000; ++n)
    if (fundamental_seq(Ordinal::omega(), n) != Ordinal::natural(n)) return {false, fmt("w[%llu]", (unsigned long long)n)};
  return {count >= 1000, fmt("%zu triples; w[n] = n for n <= 1000", count)};
}

// ---- 7 ----
Verdict lemma_inclusion() {
  Rng rng(7007);
  std::size_t trees = 0, nonempty = 0;
  for (int t = 0; t < 120; ++t) {
    const BlockTree g = sampling::spreading_block_tree(rng, 3, 12);
    if (g.block_index() > 4) return {false, "generated tree of index > 4"};
    for (std::size_t n : {0, 1}) {
      const InclusionReport r = inclusion_check(g, n, 12);
      if (!r.holds)
        return {false, g.to_json().dump() + fmt(" n=%zu counterexample ", n) + to_string(*r.counterexample)};
      nonempty += r.lhs_size > 0;
    }
    ++trees;
  }
  return {trees >= 100, fmt("%zu trees, n = 0,1, bound 12; %zu instances with non-empty left side", trees, nonempty)};
}

// ---- 8 ----
Verdict duality() {
  const NormParams p = NormParams::tsirelson(Ordinal::natural(1));
  const FunctionalSet k = norming_set(p, 6, 3);
  Rational worst(0);
  for (const auto& m : k.members()) {
    const Rational d = dual_norm(k, m.f).value;
    if (d > 1) return {false, "dual norm " + to_string(d) + " of " + to_string(m.f)};
    worst = std::max(worst, d);
  }
  Rng rng(8008);
  std::size_t pairs = 0;
  for (int i = 0; i < 220; ++i) {
    const SparseVec f = (i % 2) ? k.members()[sampling::uniform(rng, 0, static_cast<Index>(k.size() - 1))].f
                                : sampling::vector(rng, 6, 6);
    const SparseVec x = sampling::vector(rng, 6, 6);
    const Rational lhs = dot(f, x);
    const Rational rhs = dual_norm(k, f).value * norm_value(p, x);
    if (lhs > rhs) return {false, "<f,x> > ||f||*||x|| for f=" + to_string(f) + " x=" + to_string(x)};
    ++pairs;
  }
  return {pairs >= 200, fmt("%zu functionals, max dual norm %s; %zu pairs", k.size(), to_string(worst).c_str(), pairs)};
}

// ---- 9 ----
Verdict equivalence() {
  const EquivalenceReport r = equivalence_sample(Ordinal::natural(1), 2, 10, 120, 9009);
  if (r.samples < 100 || !r.max_ratio_up || !r.max_ratio_down) return {false, "too few samples"};
  const bool positive = *r.max_ratio_up > 0 && *r.max_ratio_down > 0;
  return {positive, fmt("c=%s, %zu samples; max up %s at %s; max down %s at %s", to_string(r.c).c_str(), r.samples,
                        to_string(*r.max_ratio_up).c_str(), to_string(r.witness_up->x).c_str(),
                        to_string(*r.max_ratio_down).c_str(), to_string(r.witness_down->x).c_str())};
}

// ---- 10 ----
Verdict certificates() {
  for (const auto& e : emitted) {
    try {
      if (verify_certificate(e.params, e.x, e.result.cert) != e.result.value)
        return {false, e.params.key() + " x=" + to_string(e.x)};
    } catch (const CertificateError& err) {
      return {false, e.params.key() + " x=" + to_string(e.x) + ": " + err.what()};
    }
  }
  return {!emitted.empty(), fmt("%zu certificates from criteria 3-5 re-evaluated exactly", emitted.size())};
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form family identities", 10, closed_forms},
      {2, "CB index of F_k", 10, cb_indices},
      {3, "DP = enumeration = functional supremum", 300, triple_agreement},
      {4, "l1 lower estimate on S_n sets", 120, l1_lower},
      {5, "unconditionality and right dominance", 120, basis_properties},
      {6, "natural sum algebra", 10, ordinal_algebra},
      {7, "block tree inclusion (2n+2 vs n+1)", 120, lemma_inclusion},
      {8, "duality of the norming set", 120, duality},
      {9, "equivalence ratio report", 180, equivalence},
      {10, "certificate soundness", 60, certificates},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      v.passed = false;
      v.detail += " [over time limit]";
    }
    failures += !v.passed;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", v.passed ? "PASS" : "FAIL", c.number, c.name,
                v.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
