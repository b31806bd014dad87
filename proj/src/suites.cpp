#include "schreier/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "schreier/errors.hpp"
#include "schreier/estimates.hpp"
#include "schreier/functionals.hpp"
#include "schreier/indices.hpp"
#include "schreier/json_io.hpp"
#include "schreier/norm_cache.hpp"
#include "schreier/oracle.hpp"
#include "schreier/sampling.hpp"

namespace schreier {

namespace {

using sampling::Rng;

struct Outcome {
  bool passed = true;
  std::optional<std::string> witness;
};

Outcome fail(std::string witness) { return {false, std::move(witness)}; }
Outcome note(std::string witness) { return {true, std::move(witness)}; }

struct CheckDef {
  std::string suite;
  std::string id;
  std::string anchor;
  std::function<Outcome(Rng&, const SuiteConfig&)> run;
};

NormParams tsirelson(unsigned alpha, Rational c = Rational(1, 2)) {
  return NormParams::tsirelson(Ordinal::natural(alpha), std::move(c));
}

std::vector<NormParams> oracle_params() {
  std::vector<NormParams> out;
  for (const Rational& c : {Rational(1, 2), Rational(2, 3)}) {
    out.push_back(tsirelson(1, c));
    out.push_back(tsirelson(2, c));
    out.push_back(NormParams::make(Family::fine_schreier(Ordinal::natural(5)), c));
    out.push_back(NormParams::make(Family::fine_schreier(Ordinal::omega()), c));
  }
  return out;
}

// ---- ordinals ----

void ordinal_checks(std::vector<CheckDef>& defs) {
  auto reg = [&](std::string id, std::string anchor, std::function<Outcome(Rng&, const SuiteConfig&)> f) {
    defs.push_back({"ordinals", std::move(id), std::move(anchor), std::move(f)});
  };
  reg("nsum-commutative", "natural sum a#b = b#a", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3);
      if (natural_sum(a, b) != natural_sum(b, a)) return fail(to_string(a) + " , " + to_string(b));
    }
    return Outcome{};
  });
  reg("nsum-associative", "natural sum (a#b)#c = a#(b#c)", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3), c = sampling::ordinal(rng, 3);
      if (natural_sum(natural_sum(a, b), c) != natural_sum(a, natural_sum(b, c)))
        return fail(to_string(a) + " , " + to_string(b) + " , " + to_string(c));
    }
    return Outcome{};
  });
  reg("nsum-monotone", "a<b implies a#c < b#c", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3);
      const Ordinal c = sampling::ordinal(rng, 3);
      if (b < a) std::swap(a, b);
      if (a < b && !(natural_sum(a, c) < natural_sum(b, c)))
        return fail(to_string(a) + " , " + to_string(b) + " , " + to_string(c));
    }
    return Outcome{};
  });
  reg("nsum-dominates-sum", "a+b <= a#b", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3);
      if (natural_sum(a, b) < add(a, b)) return fail(to_string(a) + " , " + to_string(b));
    }
    return Outcome{};
  });
  reg("add-associative", "(a+b)+c = a+(b+c)", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3), c = sampling::ordinal(rng, 3);
      if (add(add(a, b), c) != add(a, add(b, c)))
        return fail(to_string(a) + " , " + to_string(b) + " , " + to_string(c));
    }
    return Outcome{};
  });
  reg("mul-left-distributive", "a*(b+c) = a*b+a*c", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 200; ++i) {
      const Ordinal a = sampling::ordinal(rng, 2), b = sampling::ordinal(rng, 2), c = sampling::ordinal(rng, 2);
      if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
        return fail(to_string(a) + " , " + to_string(b) + " , " + to_string(c));
    }
    return Outcome{};
  });
  reg("fundamental-seq-omega", "w[n] = n", [](Rng&, const SuiteConfig&) {
    for (std::uint64_t n = 1; n <= 50; ++n)
      if (fundamental_seq(Ordinal::omega(), n) != Ordinal::natural(n)) return fail("n=" + std::to_string(n));
    return Outcome{};
  });
  reg("fundamental-seq-increasing", "l[n] < l[n+1] < l", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 200; ++i) {
      const Ordinal l = sampling::ordinal(rng, 3);
      if (!l.is_limit()) continue;
      for (std::uint64_t n = 1; n <= 6; ++n) {
        const Ordinal a = fundamental_seq(l, n), b = fundamental_seq(l, n + 1);
        if (!(a < b && b < l)) return fail(to_string(l) + " n=" + std::to_string(n));
      }
    }
    return Outcome{};
  });
  reg("cnf-text-round-trip", "parse(to_string(a)) = a", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 300; ++i) {
      const Ordinal a = sampling::ordinal(rng, 3);
      if (parse_ordinal(to_string(a)) != a) return fail(to_string(a));
    }
    return Outcome{};
  });
}

// ---- families ----

void family_checks(std::vector<CheckDef>& defs) {
  auto reg = [&](std::string id, std::string anchor, std::function<Outcome(Rng&, const SuiteConfig&)> f) {
    defs.push_back({"families", std::move(id), std::move(anchor), std::move(f)});
  };
  reg("fine-finite-closed-form", "F_k = {A : |A| <= k}", [](Rng&, const SuiteConfig&) {
    for (unsigned k = 0; k <= 4; ++k)
      for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        const FinSet a = FinSet::from_mask(mask);
        if (fs_member(Ordinal::natural(k), a) != (a.size() <= k))
          return fail("k=" + std::to_string(k) + " A=" + to_string(a));
      }
    return Outcome{};
  });
  reg("schreier-one-closed-form", "S_1 = {A : |A| <= min A}", [](Rng&, const SuiteConfig&) {
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
      const FinSet a = FinSet::from_mask(mask);
      if (schreier_member(Ordinal::natural(1), a) != (a.empty() || a.size() <= a.min())) return fail(to_string(a));
    }
    return Outcome{};
  });
  // Interval chains in F_{w^2} from n reach length about n*2^n.
  struct Probe {
    const char* alpha;
    Index bound;
    std::size_t cap;
  };
  for (const Probe& pr : {Probe{"3", 10, 256}, Probe{"w", 10, 256}, Probe{"w+2", 10, 256}, Probe{"w*2", 10, 256},
                          Probe{"w^2", 5, 256}}) {
    reg(std::string("structure-fine(") + pr.alpha + ")", "F_alpha hereditary, spreading, compact",
        [pr](Rng&, const SuiteConfig&) {
          const StructureReport r = check_structure(Family::fine_schreier(parse_ordinal(pr.alpha)), pr.bound, pr.cap);
          if (!(r.hereditary && r.spreading && r.compact_no_chain)) return fail("bound " + std::to_string(pr.bound));
          return Outcome{};
        });
  }
  for (unsigned k = 0; k <= 5; ++k) {
    reg("cb_index(F_" + std::to_string(k) + ")=" + std::to_string(k + 1), "cbi(F_alpha) = alpha+1",
        [k](Rng&, const SuiteConfig&) {
          const CbIndexResult r = cb_index_finite(Family::fine_schreier(Ordinal::natural(k)), 16);
          if (!r.index || *r.index != k + 1) return fail(r.index ? std::to_string(*r.index) : "unbounded");
          return Outcome{};
        });
  }
  reg("residual-consistency", "B in F/A iff A<B and A+B in F", [](Rng& rng, const SuiteConfig&) {
    const std::vector<Family> fams = {Family::fine_schreier(parse_ordinal("w+1")), Family::schreier(Ordinal::natural(2)),
                                      Family::fine_schreier(parse_ordinal("w*2"))};
    for (const auto& f : fams) {
      for (int i = 0; i < 150; ++i) {
        const FinSet a = sampling::subset(rng, 6);
        if (!f.contains(a)) continue;
        const Family r = residual(f, a);
        for (int j = 0; j < 10; ++j) {
          const FinSet b = sampling::subset(rng, 12);
          const bool expect = precedes(a, b) && f.contains(a.united(b));
          if (r.contains(b) != expect) return fail(f.descriptor() + " A=" + to_string(a) + " B=" + to_string(b));
        }
      }
    }
    return Outcome{};
  });
  reg("fine-nested-successor", "F_a is contained in F_{a+1}", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 200; ++i) {
      const FinSet a = sampling::subset(rng, 10);
      for (unsigned k = 0; k < 6; ++k)
        if (fs_member(Ordinal::natural(k), a) && !fs_member(Ordinal::natural(k + 1), a)) return fail(to_string(a));
      if (fs_member(Ordinal::omega(), a) && !fs_member(parse_ordinal("w+1"), a)) return fail(to_string(a));
    }
    return Outcome{};
  });
  reg("enumerate-lexicographic-members", "enumeration lists exactly the members", [](Rng&, const SuiteConfig&) {
    const Family f = Family::schreier(Ordinal::natural(1));
    EnumerateOptions opts;
    opts.bound = 10;
    const auto sets = enumerate(f, opts);
    if (!std::is_sorted(sets.begin(), sets.end())) return fail("order");
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) count += f.contains(FinSet::from_mask(mask));
    if (count != sets.size()) return fail(std::to_string(sets.size()) + " vs " + std::to_string(count));
    return Outcome{};
  });
}

// ---- norms ----

std::string vec_text(const NormParams& p, const SparseVec& x) { return p.key() + " x=" + to_string(x); }

void norm_checks(std::vector<CheckDef>& defs) {
  auto reg = [&](std::string id, std::string anchor, std::function<Outcome(Rng&, const SuiteConfig&)> f) {
    defs.push_back({"norms", std::move(id), std::move(anchor), std::move(f)});
  };
  reg("dp-equals-enumeration", "least norm: max(sup, c sup sum |A_i x|)", [](Rng& rng, const SuiteConfig&) {
    for (const auto& p : oracle_params())
      for (int i = 0; i < 8; ++i) {
        const SparseVec x = sampling::vector(rng, 10, 7);
        if (norm_value(p, x) != oracle::partition_enumeration_norm(p, x)) return fail(vec_text(p, x));
      }
    return Outcome{};
  });
  reg("dp-equals-functionals", "norm as a supremum of norming functionals", [](Rng& rng, const SuiteConfig&) {
    for (const auto& p : oracle_params())
      for (int i = 0; i < 8; ++i) {
        const SparseVec x = sampling::vector(rng, 10, 8);
        if (norm_value(p, x) != norm_via_functionals(p, x, x.support_size())) return fail(vec_text(p, x));
      }
    return Outcome{};
  });
  reg("certificate-soundness", "admissible decomposition tree attains the norm", [](Rng& rng, const SuiteConfig&) {
    for (const auto& p : oracle_params())
      for (int i = 0; i < 10; ++i) {
        const SparseVec x = sampling::vector(rng, 16, 8);
        const NormResult r = norm(p, x);
        try {
          if (verify_certificate(p, x, r.cert) != r.value) return fail(vec_text(p, x));
        } catch (const CertificateError& e) {
          return fail(vec_text(p, x) + " " + e.what());
        }
      }
    return Outcome{};
  });
  reg("dominates-sup-norm", "||x|| >= ||x||_inf", [](Rng& rng, const SuiteConfig&) {
    for (const auto& p : oracle_params())
      for (int i = 0; i < 10; ++i) {
        const SparseVec x = sampling::vector(rng, 20, 8);
        if (norm_value(p, x) < x.sup_norm()) return fail(vec_text(p, x));
      }
    return Outcome{};
  });
  reg("monotone-in-c", "c <= c' implies ||x||_c <= ||x||_c'", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 40; ++i) {
      const SparseVec x = sampling::vector(rng, 14, 8);
      if (norm_value(tsirelson(1), x) > norm_value(tsirelson(1, Rational(2, 3)), x)) return fail(to_string(x));
    }
    return Outcome{};
  });
  reg("monotone-in-family", "F subset G implies ||x||_F <= ||x||_G", [](Rng& rng, const SuiteConfig&) {
    const NormParams f3 = NormParams::make(Family::fine_schreier(Ordinal::natural(3)), Rational(1, 2));
    const NormParams f5 = NormParams::make(Family::fine_schreier(Ordinal::natural(5)), Rational(1, 2));
    for (int i = 0; i < 40; ++i) {
      const SparseVec x = sampling::vector(rng, 14, 8);
      if (norm_value(tsirelson(1), x) > norm_value(tsirelson(2), x)) return fail("S_1/S_2 " + to_string(x));
      if (norm_value(f3, x) > norm_value(f5, x)) return fail("F_3/F_5 " + to_string(x));
    }
    return Outcome{};
  });
  reg("projection-contraction", "||Ax|| <= ||x||", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 60; ++i) {
      const SparseVec x = sampling::vector(rng, 12, 8);
      const SparseVec y = x.project(sampling::subset(rng, 12));
      if (norm_value(tsirelson(2), y) > norm_value(tsirelson(2), x)) return fail(to_string(x));
    }
    return Outcome{};
  });
  reg("homogeneity-triangle", "||tx|| = |t| ||x||, ||x+y|| <= ||x||+||y||", [](Rng& rng, const SuiteConfig&) {
    const NormParams p = tsirelson(1, Rational(2, 3));
    for (int i = 0; i < 60; ++i) {
      const SparseVec x = sampling::vector(rng, 12, 6), y = sampling::vector(rng, 12, 6);
      const Rational t = sampling::nonzero_rational(rng);
      if (norm_value(p, x.scaled(t)) != abs(t) * norm_value(p, x)) return fail("scale " + to_string(x));
      if (norm_value(p, x + y) > norm_value(p, x) + norm_value(p, y)) return fail(to_string(x) + " + " + to_string(y));
    }
    return Outcome{};
  });
  reg("unconditional", "1-unconditional basis", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 20; ++i) {
      const SparseVec x = sampling::vector(rng, 10, 7);
      if (!check_unconditional(tsirelson(1), x)) return fail(to_string(x));
    }
    // Sign patterns against the signed functionals themselves.
    const FunctionalSet k = norming_set(tsirelson(1), 6, 3);
    for (int i = 0; i < 20; ++i) {
      const SparseVec x = sampling::vector(rng, 6, 6);
      if (norm_via_functionals(k, x) != norm_via_functionals(k, -x.project(x.support().tail()) + x.project(FinSet{x.support().min()})))
        return fail("functionals " + to_string(x));
    }
    return Outcome{};
  });
  reg("right-dominant", "1-right-dominant basis", [](Rng& rng, const SuiteConfig&) {
    for (int i = 0; i < 60; ++i) {
      const SparseVec x = sampling::vector(rng, 10, 7);
      if (!check_right_dominant(tsirelson(1), x, sampling::spread(rng, x.support(), 4))) return fail(to_string(x));
    }
    return Outcome{};
  });
  reg("l1-lower-estimate", "S_n sets are 2^n-equivalent to l_1", [](Rng& rng, const SuiteConfig&) {
    for (std::uint64_t n : {1, 2}) {
      const Family fam = Family::schreier(Ordinal::natural(n));
      for (int found = 0; found < 20;) {
        const FinSet f = sampling::subset(rng, 12);
        if (f.empty() || !fam.contains(f)) continue;
        ++found;
        std::vector<Rational> a;
        for (std::size_t j = 0; j < f.size(); ++j) a.push_back(sampling::nonzero_rational(rng));
        if (!check_l1_lower(Ordinal::natural(1), n, f, a).holds) return fail("n=" + std::to_string(n) + " F=" + to_string(f));
      }
    }
    return Outcome{};
  });
  reg("duality", "<f,x> <= ||f||* ||x||", [](Rng& rng, const SuiteConfig&) {
    const NormParams p = tsirelson(1);
    const FunctionalSet k = norming_set(p, 5, 2);
    for (const auto& m : k.members())
      if (dual_norm(k, m.f).value > 1) return fail("functional " + to_string(m.f));
    for (int i = 0; i < 30; ++i) {
      const SparseVec f = sampling::vector(rng, 5, 4), x = sampling::vector(rng, 5, 5);
      if (dot(f, x) > dual_norm(k, f).value * norm_value(p, x)) return fail(to_string(f) + " , " + to_string(x));
    }
    return Outcome{};
  });
  reg("cache-transparency", "cached values equal recomputation", [](Rng& rng, const SuiteConfig& cfg) {
    const bool temporary = !cfg.cache_dir.has_value();
    const std::filesystem::path dir =
        temporary ? std::filesystem::temp_directory_path() / ("schreier-suite-" + std::to_string(cfg.seed) + "-" +
                                                              std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())))
                  : *cfg.cache_dir;
    const NormParams p = tsirelson(2, Rational(2, 3));
    std::vector<SparseVec> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(sampling::vector(rng, 12, 6));
    Outcome out;
    for (int pass = 0; pass < 2 && out.passed; ++pass) {
      NormCache cache(dir);
      for (const auto& x : xs)
        if (cache.value(p, x) != norm_value(p, x)) {
          out = fail((pass ? "warm " : "cold ") + to_string(x));
          break;
        }
    }
    if (temporary) std::filesystem::remove_all(dir);
    return out;
  });
  reg("domination-identical", "(f_i) C-dominates (e_i)", [](Rng&, const SuiteConfig&) {
    const DominationResult r = domination_search(tsirelson(1), tsirelson(1), 6, 300);
    if (r.lower_bound != 1) return fail(to_string(r.lower_bound));
    return Outcome{};
  });
  reg("equivalence-report", "T_{a*n} and T_{a,c}, c = 2^{-1/n}, are equivalent", [](Rng& rng, const SuiteConfig&) {
    const EquivalenceReport one = equivalence_sample(Ordinal::natural(1), 1, 10, 20, rng());
    if (*one.max_ratio_up != 1 || *one.max_ratio_down != 1) return fail("n=1 ratios differ from 1");
    const EquivalenceReport two = equivalence_sample(Ordinal::natural(1), 2, 10, 30, rng());
    return note("n=2 c=" + to_string(two.c) + " up=" + to_string(*two.max_ratio_up) +
                " down=" + to_string(*two.max_ratio_down));
  });
}

// ---- indices ----

BlockSeq random_block_seq(Rng& rng, Index bound) {
  BlockSeq s;
  Index next = sampling::uniform(rng, 1, 4);
  const Index len = sampling::uniform(rng, 0, 3);
  for (Index b = 0; b < len && next <= bound; ++b) {
    const Index size = std::min(sampling::uniform(rng, 1, 2), bound - next + 1);
    s.push_back(FinSet::interval(next, next + size - 1));
    next += size + sampling::uniform(rng, 0, 2);
  }
  return s;
}

void index_checks(std::vector<CheckDef>& defs) {
  auto reg = [&](std::string id, std::string anchor, std::function<Outcome(Rng&, const SuiteConfig&)> f) {
    defs.push_back({"indices", std::move(id), std::move(anchor), std::move(f)});
  };
  reg("order-two-ways", "order of a tree: derivative count = height", [](Rng& rng, const SuiteConfig&) {
    for (int t = 0; t < 100; ++t) {
      std::vector<ExplicitTree::Sequence> seqs;
      const Index count = sampling::uniform(rng, 0, 6);
      for (Index i = 0; i < count; ++i) {
        ExplicitTree::Sequence s(sampling::uniform(rng, 0, 5));
        for (auto& label : s) label = std::string(1, static_cast<char>('a' + sampling::uniform(rng, 0, 2)));
        seqs.push_back(s);
      }
      const ExplicitTree tree = ExplicitTree::from_sequences(seqs);
      if (order(tree) != order_recursive(tree)) return fail("tree with " + std::to_string(tree.size()) + " nodes");
    }
    return Outcome{};
  });
  reg("block-derivative-decreasing-monotone", "block derivative keeps extendable members", [](Rng& rng, const SuiteConfig&) {
    for (int t = 0; t < 60; ++t) {
      const BlockTree g = sampling::spreading_block_tree(rng, 3, 12);
      std::vector<BlockSeq> more = g.generators();
      const BlockTree extra = sampling::spreading_block_tree(rng, 3, 12);
      more.insert(more.end(), extra.generators().begin(), extra.generators().end());
      const BlockTree bigger(more, Closure::spreading);
      const BlockTree dg = block_derivative(g), dbig = block_derivative(bigger);
      for (int i = 0; i < 40; ++i) {
        const BlockSeq s = random_block_seq(rng, 12);
        if (dg.contains(s) && !g.contains(s)) return fail("not decreasing: " + g.to_json().dump());
        if (dg.contains(s) && !dbig.contains(s)) return fail("not monotone: " + g.to_json().dump());
      }
    }
    return Outcome{};
  });
  reg("lift-index", "lifts of F_k empty after k+1 block derivatives", [](Rng&, const SuiteConfig&) {
    for (std::size_t k = 0; k <= 4; ++k) {
      EnumerateOptions opts;
      opts.bound = static_cast<Index>(k + 2);
      opts.maximal_only = true;
      BlockTree t = BlockTree::lift(enumerate(Family::fine_schreier(Ordinal::natural(k)), opts));
      std::size_t steps = 0;
      for (; !t.empty(); ++steps) t = block_derivative(t);
      const CbIndexResult cb = cb_index_finite(
          min_family(BlockTree::lift(enumerate(Family::fine_schreier(Ordinal::natural(k)), opts))), 16);
      if (steps != k + 1 || !cb.index || *cb.index != k + 1) return fail("k=" + std::to_string(k));
    }
    return Outcome{};
  });
  reg("compression-hereditary", "compression of a hereditary block tree", [](Rng& rng, const SuiteConfig&) {
    for (int t = 0; t < 30; ++t) {
      const BlockTree g = sampling::spreading_block_tree(rng, 3, 12);
      const StructureReport r = check_structure(min_family(g), 10);
      if (!r.hereditary || !r.spreading) return fail(g.to_json().dump());
      EnumerateOptions opts;
      opts.bound = 8;
      if (enumerate(compression(g, 8), opts) != enumerate(min_set(g, 8), opts)) return fail("min_set " + g.to_json().dump());
    }
    return Outcome{};
  });
  reg("lemma-inclusion", "(min G)^(2n+2) inside min(G^(n+1))", [](Rng& rng, const SuiteConfig&) {
    for (int t = 0; t < 50; ++t) {
      const BlockTree g = sampling::spreading_block_tree(rng, 3, 12);
      for (std::size_t n : {0, 1}) {
        const InclusionReport r = inclusion_check(g, n, 12);
        if (!r.holds) return fail(g.to_json().dump() + " n=" + std::to_string(n) + " " + to_string(*r.counterexample));
      }
    }
    return Outcome{};
  });
  reg("witness-lift", "witness family (x_F) over F_alpha", [](Rng&, const SuiteConfig&) {
    auto successive_blocks = [](const std::vector<FinSet>& seq) { return is_successive(seq); };
    for (unsigned a = 0; a <= 3; ++a) {
      EnumerateOptions opts;
      opts.bound = a + 1;
      opts.maximal_only = true;
      const Ordinal alpha = Ordinal::natural(a);
      const BlockTree target = BlockTree::lift(enumerate(Family::fine_schreier(alpha), opts));
      const WitnessReport r = witness_verify(alpha, identity_lift_witness(alpha, 9), target, successive_blocks, 9);
      if (!r.ok) return fail("alpha=" + std::to_string(a) + " " + r.reason);
    }
    return Outcome{};
  });
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    ordinal_checks(d);
    family_checks(d);
    norm_checks(d);
    index_checks(d);
    return d;
  }();
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ordinals", "families", "norms", "indices", "all"};
  return names;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"id", c.id}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}};
    if (c.witness) j["witness"] = *c.witness;
    list.push_back(std::move(j));
  }
  nlohmann::json out{{"suite", suite}, {"seed", seed}, {"checks", std::move(list)}};
  if (with_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << " [" << c.anchor << "]";
    if (c.witness) out << " " << *c.witness;
    out << '\n';
  }
  return out.str();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw DomainError("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  std::vector<const CheckDef*> selected;
  for (const auto& d : registry())
    if (name == "all" || d.suite == name) selected.push_back(&d);

  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const CheckDef& d = *selected[i];
      // Each check owns a stream derived from the seed and its id.
      Rng rng(config.seed ^ fnv1a(d.id));
      Outcome o;
      try {
        o = d.run(rng, config);
      } catch (const std::exception& e) {
        o = fail(std::string("exception: ") + e.what());
      }
      results[i] = CheckResult{d.id, d.anchor, o.passed, std::move(o.witness)};
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.suite = name;
  report.seed = config.seed;
  report.checks = std::move(results);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace schreier
