#include <doctest.h>

#include "schreier/errors.hpp"
#include "schreier/family.hpp"
#include "schreier/sparse_vec.hpp"
#include "support/gen.hpp"

using namespace schreier;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }

std::vector<FinSet> enumerate_to(const Family& f, Index bound, bool maximal = false) {
  EnumerateOptions opts;
  opts.bound = bound;
  opts.maximal_only = maximal;
  return enumerate(f, opts);
}

}  // namespace

TEST_CASE("finite sets") {
  const FinSet a = parse_finset("2,5,9");
  CHECK(a == FinSet{2, 5, 9});
  CHECK_THROWS_AS(parse_finset("9,2,5"), ParseError);
  CHECK(to_string(a) == "2,5,9");
  CHECK(parse_finset("-").empty());
  CHECK_THROWS_AS(parse_finset("2,x"), ParseError);
  CHECK_THROWS_AS(parse_finset("0"), ParseError);
  CHECK(is_spread(FinSet{1, 3}, FinSet{2, 5}));
  CHECK(is_spread(FinSet{}, FinSet{}));
  CHECK_FALSE(is_spread(FinSet{2, 5}, FinSet{1, 9}));
  CHECK(precedes(FinSet{1, 2}, FinSet{3}));
  CHECK_FALSE(precedes(FinSet{1, 3}, FinSet{3}));
  CHECK(FinSet::from_mask(0b1011) == FinSet{1, 2, 4});
}

TEST_CASE("rationals and sparse vectors") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  const SparseVec x = parse_sparse_vec("3:1,4:1,5:-2/3");
  CHECK(x.support() == FinSet{3, 4, 5});
  CHECK(to_string(x) == "3:1,4:1,5:-2/3");
  CHECK(parse_sparse_vec("0").is_zero());
  CHECK(parse_sparse_vec("2:0").is_zero());
  CHECK_THROWS_AS(parse_sparse_vec("3:1,3:2"), ParseError);
  CHECK(x.l1_norm() == Rational(8, 3));
  CHECK(x.sup_norm() == 1);
  CHECK(dot(x, x) == Rational(22, 9));
}

TEST_CASE("fine Schreier membership") {
  CHECK(fs_member(Ordinal::zero(), FinSet{}));
  CHECK_FALSE(fs_member(Ordinal::zero(), FinSet{1}));
  CHECK(fs_member(o("3"), FinSet{2, 5, 9}));
  CHECK_FALSE(fs_member(o("w"), FinSet{2, 5, 9}));
  CHECK(fs_member(o("w"), FinSet{3, 5, 9}));
  CHECK(fs_member(o("w+1"), FinSet{2, 3, 5, 9}));
  CHECK(fs_member(o("w*2"), FinSet{2, 5, 9}));  // w+2 at n = 2
}

TEST_CASE("Schreier membership") {
  CHECK(schreier_member(o("1"), FinSet{3, 5, 9}));
  CHECK_FALSE(schreier_member(o("1"), FinSet{2, 5, 9}));
  CHECK(schreier_member(o("1"), FinSet{}));
  CHECK(schreier_member(o("2"), FinSet{2, 3, 4, 5, 6, 7}));  // {2,3} then {4,5,6,7}
  CHECK_FALSE(schreier_member(o("2"), FinSet{2, 3, 4, 5, 6, 7, 8}));
  CHECK_THROWS_AS(schreier_member(Ordinal::zero(), FinSet{}), DomainError);
}

TEST_CASE("maximality") {
  const Family s1 = Family::schreier(o("1"));
  CHECK(is_maximal(s1, FinSet{3, 5, 9}));
  CHECK_FALSE(is_maximal(s1, FinSet{3, 5}));
  CHECK(is_maximal(Family::fine_schreier(Ordinal::zero()), FinSet{}));
  CHECK_THROWS_AS(is_maximal(s1, FinSet{1, 2}), DomainError);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_to(Family::fine_schreier(o("1")), 3) == std::vector<FinSet>{FinSet{}, FinSet{1}, FinSet{2}, FinSet{3}});
  CHECK(enumerate_to(Family::schreier(o("1")), 2, true) == std::vector<FinSet>{FinSet{1}});
  CHECK(enumerate_to(Family::fine_schreier(Ordinal::zero()), 5) == std::vector<FinSet>{FinSet{}});
  EnumerateOptions tight;
  tight.bound = 14;
  tight.budget = 10;
  CHECK_THROWS_AS(enumerate(Family::schreier(o("1")), tight), BudgetExceeded);
}

TEST_CASE("admissibility") {
  const Family s1 = Family::schreier(o("1"));
  CHECK(is_admissible(s1, std::vector<FinSet>{FinSet{2, 3}, FinSet{4, 7}}));
  CHECK_FALSE(is_admissible(s1, std::vector<FinSet>{FinSet{1}, FinSet{2}}));
  CHECK_FALSE(is_admissible(s1, std::vector<FinSet>{FinSet{2, 5}, FinSet{4}}));
  const Family only5 = Family::explicit_sets(std::vector<FinSet>{FinSet{5}});
  CHECK(is_admissible(only5, std::vector<FinSet>{FinSet{5}}));
  CHECK_FALSE(is_admissible(only5, std::vector<FinSet>{FinSet{4}}));
  CHECK_THROWS_AS(is_admissible(s1, std::vector<FinSet>{}), DomainError);
}

TEST_CASE("residuals") {
  const Family f3 = Family::fine_schreier(o("3"));
  const Family r = residual(f3, FinSet{5});
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    const FinSet b = FinSet::from_mask(mask);
    CHECK(r.contains(b) == (precedes(FinSet{5}, b) && b.size() <= 2));
  }
  CHECK(residual(f3, FinSet{}).descriptor() == f3.descriptor());
  const Family s1 = residual(Family::schreier(o("1")), FinSet{3});
  CHECK(s1.contains(FinSet{4, 9}));
  CHECK_FALSE(s1.contains(FinSet{4, 5, 6}));
  CHECK_FALSE(s1.contains(FinSet{2}));
  CHECK_THROWS_AS(residual(f3, FinSet{1, 2, 3, 4}), DomainError);
}

TEST_CASE("residual against direct membership for limit orders") {
  testgen::Rng rng(43);
  for (const char* alpha : {"w", "w+3", "w*2", "w^2", "w^w"}) {
    const Family f = Family::fine_schreier(o(alpha));
    for (int i = 0; i < 60; ++i) {
      const FinSet a = testgen::random_set(rng, 8, 3);
      if (!f.contains(a)) continue;
      const Family r = residual(f, a);
      for (int j = 0; j < 20; ++j) {
        const FinSet b = testgen::random_set(rng, 14, 6);
        CHECK(r.contains(b) == (precedes(a, b) && f.contains(a.united(b))));
      }
    }
  }
}

TEST_CASE("structure probes") {
  const StructureReport f4 = check_structure(Family::fine_schreier(o("4")), 10);
  CHECK((f4.hereditary && f4.spreading && f4.compact_no_chain));
  const StructureReport s1 = check_structure(Family::schreier(o("1")), 12);
  CHECK((s1.hereditary && s1.spreading && s1.compact_no_chain));
  const Family bad = Family::explicit_sets(std::vector<FinSet>{FinSet{}, FinSet{1, 2}}, false);
  CHECK_FALSE(check_structure(bad, 3).hereditary);
}

TEST_CASE("Cantor-Bendixson derivatives") {
  const Family d1 = cb_derivative(Family::fine_schreier(o("1")));
  CHECK(enumerate_to(d1, 6) == std::vector<FinSet>{FinSet{}});
  CHECK(cb_derivative(Family::fine_schreier(Ordinal::zero())).is_empty());
  for (unsigned k = 0; k <= 6; ++k) {
    const CbIndexResult r = cb_index_finite(Family::fine_schreier(Ordinal::natural(k)), 16);
    REQUIRE(r.index);
    CHECK(*r.index == k + 1);
  }
  CHECK_FALSE(cb_index_finite(Family::schreier(o("1")), 12).index.has_value());
  CHECK_FALSE(cb_index_finite(Family::schreier(o("2")), 6).index.has_value());
  CHECK_THROWS_AS(cb_derivative(Family::explicit_sets(std::vector<FinSet>{FinSet{1}})), DomainError);
}

TEST_CASE("explicit families") {
  const Family f = Family::explicit_sets(std::vector<FinSet>{FinSet{2, 5}});
  CHECK(f.contains(FinSet{5}));
  CHECK_FALSE(f.contains(FinSet{2, 6}));
  CHECK(check_structure(f, 6).hereditary);
  CHECK_FALSE(check_structure(f, 6).spreading);
  const Family u = Family::union_of({Family::fine_schreier(o("1")), f});
  CHECK(u.contains(FinSet{2, 5}));
  CHECK(u.contains(FinSet{7}));
  CHECK(Family::union_of({}).is_empty());
}

TEST_CASE("finite derivatives match extension by k far-out points") {
  // For spreading hereditary families, A is in the k-th derivative iff A
  // extends by k elements; far-out points are the most permissive choice.
  for (const char* alpha : {"1", "2", "w"}) {
    const Family base = Family::schreier(o(alpha));
    Family d = base;
    for (Index k = 1; k <= 3; ++k) {
      d = cb_derivative(d);
      for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        const FinSet a = FinSet::from_mask(mask);
        if (!base.contains(a)) continue;
        FinSet far = a;
        for (Index j = 0; j < k; ++j) far = far.with(40 + j);
        CHECK(d.contains(a) == base.contains(far));
      }
    }
  }
}
