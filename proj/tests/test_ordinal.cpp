#include <doctest.h>

#include "schreier/errors.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/sampling.hpp"

using namespace schreier;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }

}  // namespace

TEST_CASE("parsing and canonical text") {
  CHECK(o("0").is_zero());
  CHECK(to_string(o("w+w")) == "w*2");
  CHECK(o("1+w") == Ordinal::omega());
  CHECK(to_string(o("w^(w+1)*2 + w^2 + w*3 + 4")) == "w^(w+1)*2+w^(2)+w*3+4");
  CHECK(to_string(o("(w+1)*2")) == "w*2+1");
  CHECK(to_string(o("2*w")) == "w");
  CHECK_THROWS_AS(o(""), ParseError);
  CHECK_THROWS_AS(o("w*0"), ParseError);
  CHECK_THROWS_AS(o("w^"), ParseError);
  CHECK_THROWS_AS(o("w+)"), ParseError);
  try {
    o("w+x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("comparison") {
  CHECK(o("w") > o("3"));
  CHECK(o("w*2+1") == o("w*2+1"));
  CHECK(o("w^2") > o("w*5+7"));
  CHECK(o("w^w") > o("w^5*100"));
}

TEST_CASE("arithmetic examples") {
  CHECK(add(Ordinal::omega(), Ordinal::natural(1)) == o("w+1"));
  CHECK(mul(o("w*2"), Ordinal::omega()) == o("w^2"));
  CHECK(mul(Ordinal::omega(), o("2")) == o("w*2"));
  CHECK(omega_pow(o("w+1")) == o("w^(w+1)"));
  CHECK(natural_sum(o("w^3+1"), Ordinal::zero()) == o("w^3+1"));
  CHECK(natural_sum(o("w*2+1"), o("w+2")) == o("w*3+3"));
  CHECK(natural_sum(Ordinal::omega(), o("1")) == o("w+1"));
  CHECK(natural_sum(o("1"), Ordinal::omega()) == o("w+1"));
  CHECK(add(o("1"), Ordinal::omega()) == Ordinal::omega());
}

TEST_CASE("fundamental sequences") {
  CHECK(fundamental_seq(Ordinal::omega(), 5) == o("5"));
  CHECK(fundamental_seq(o("w^2"), 3) == o("w*3"));
  CHECK(fundamental_seq(o("w*2"), 4) == o("w+4"));
  CHECK(fundamental_seq(o("w^w"), 3) == o("w^3"));
  CHECK(fundamental_seq(o("w^(w+1)"), 2) == o("w^w*2"));
  CHECK_THROWS_AS(fundamental_seq(o("w+1"), 2), DomainError);
  CHECK_THROWS_AS(fundamental_seq(Ordinal::omega(), 0), DomainError);
}

TEST_CASE("classification") {
  CHECK(classify(Ordinal::zero()).kind == OrdinalKind::zero);
  const Classification s = classify(o("w+2"));
  CHECK(s.kind == OrdinalKind::successor);
  CHECK(*s.predecessor == o("w+1"));
  CHECK(classify(o("w^w")).kind == OrdinalKind::limit);
  CHECK(o("7").as_natural() == Integer(7));
  CHECK_FALSE(o("w").as_natural().has_value());
}

TEST_CASE("normal form validation") {
  CHECK_THROWS_AS(Ordinal::from_terms({{o("1"), Integer(1)}, {o("2"), Integer(1)}}), DomainError);
  CHECK_THROWS_AS(Ordinal::from_terms({{o("1"), Integer(0)}}), DomainError);
}

TEST_CASE("large coefficients do not overflow") {
  const Ordinal big = mul(o("w+1"), Ordinal::natural(Integer("100000000000000000000")));
  CHECK(to_string(big) == "w*100000000000000000000+1");
}

TEST_CASE("algebraic properties on random ordinals") {
  sampling::Rng rng(41);
  for (int i = 0; i < 400; ++i) {
    const Ordinal a = sampling::ordinal(rng, 3), b = sampling::ordinal(rng, 3), c = sampling::ordinal(rng, 3);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(natural_sum(a, b) == natural_sum(b, a));
    CHECK(natural_sum(a, b) >= add(a, b));
    CHECK(parse_ordinal(to_string(a)) == a);
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
    if (a.is_limit()) {
      for (std::uint64_t n = 1; n < 5; ++n) {
        CHECK(fundamental_seq(a, n) < fundamental_seq(a, n + 1));
        CHECK(fundamental_seq(a, n + 1) < a);
      }
    }
  }
}
