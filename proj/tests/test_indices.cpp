#include <doctest.h>

#include "schreier/errors.hpp"
#include "schreier/indices.hpp"
#include "support/gen.hpp"

using namespace schreier;

namespace {

ExplicitTree all_sequences(const std::vector<std::string>& alphabet, std::size_t len) {
  std::vector<ExplicitTree::Sequence> out{{}};
  std::vector<ExplicitTree::Sequence> layer{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<ExplicitTree::Sequence> next;
    for (const auto& s : layer)
      for (const auto& a : alphabet) {
        auto t = s;
        t.push_back(a);
        next.push_back(t);
      }
    layer = next;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return ExplicitTree::from_sequences(out);
}

BlockTree gen(std::vector<BlockSeq> g) { return BlockTree(std::move(g), Closure::spreading); }

}  // namespace

TEST_CASE("order of explicit trees") {
  CHECK(order(ExplicitTree()) == 1);
  CHECK(order(all_sequences({"a", "b"}, 3)) == 4);
  CHECK(order(ExplicitTree::from_sequences({{"1", "2", "3", "4", "5"}})) == 6);
  CHECK(order_recursive(all_sequences({"a", "b"}, 3)) == 4);
}

TEST_CASE("iterative and recursive orders agree") {
  testgen::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    std::vector<ExplicitTree::Sequence> seqs;
    const Index count = testgen::uniform(rng, 0, 6);
    for (Index i = 0; i < count; ++i) {
      ExplicitTree::Sequence s;
      const Index len = testgen::uniform(rng, 0, 5);
      for (Index j = 0; j < len; ++j) s.push_back(std::string(1, static_cast<char>('a' + testgen::uniform(rng, 0, 2))));
      seqs.push_back(s);
    }
    const ExplicitTree tree = ExplicitTree::from_sequences(seqs);
    CHECK(order(tree) == order_recursive(tree));
  }
}

TEST_CASE("block derivative of spreading trees") {
  const BlockTree t = gen({{FinSet{1}, FinSet{2}}});
  const BlockTree d = block_derivative(t);
  CHECK(d.contains({FinSet{1}}));
  CHECK(d.contains({}));
  CHECK_FALSE(d.contains({FinSet{1}, FinSet{2}}));
  CHECK(t.contains({FinSet{4}, FinSet{9}}));
  CHECK_FALSE(t.contains({FinSet{4, 5}}));

  const BlockTree single = gen({{FinSet{1}}});
  const BlockTree once = block_derivative(single);
  CHECK(once.contains({}));
  CHECK_FALSE(once.contains({FinSet{3}}));
  CHECK(block_derivative(once).empty());
  CHECK_FALSE(block_derivative(once).contains({}));

  CHECK_THROWS_AS(block_derivative(BlockTree({{FinSet{1}}}, Closure::explicit_tree)), DomainError);
  CHECK_THROWS_AS(gen({{FinSet{3}, FinSet{2}}}), DomainError);
}

TEST_CASE("compression reads minima") {
  const BlockTree t({{FinSet{2, 3}, FinSet{5, 9}}}, Closure::explicit_tree);
  const Family f = compression(t);
  CHECK(f.contains(FinSet{}));
  CHECK(f.contains(FinSet{2}));
  CHECK(f.contains(FinSet{2, 5}));
  CHECK_FALSE(f.contains(FinSet{5}));
  EnumerateOptions opts;
  opts.bound = 10;
  CHECK(enumerate(f, opts).size() == 3);

  const Family root_only = compression(BlockTree({BlockSeq{}}, Closure::explicit_tree));
  CHECK(enumerate(root_only, opts) == std::vector<FinSet>{FinSet{}});

  CHECK_THROWS_AS(compression(gen({{FinSet{1}}})), DomainError);
  const Family spread = compression(gen({{FinSet{2}, FinSet{3, 4}}}), 6);
  opts.bound = 6;
  for (const auto& a : enumerate(spread, opts)) CHECK(min_set(gen({{FinSet{2}, FinSet{3, 4}}}), 6).contains(a));
  CHECK(spread.contains(FinSet{5, 6}));
  CHECK_FALSE(spread.contains(FinSet{1}));
  CHECK(check_structure(min_family(gen({{FinSet{2}, FinSet{3, 4}}})), 10).hereditary);
}

TEST_CASE("lifts of F_k empty after k+1 derivatives") {
  for (std::size_t k = 0; k <= 4; ++k) {
    EnumerateOptions opts;
    opts.bound = static_cast<Index>(k + 1);
    opts.maximal_only = true;
    const auto sets = enumerate(Family::fine_schreier(Ordinal::natural(k)), opts);
    BlockTree t = BlockTree::lift(sets);
    std::size_t steps = 0;
    while (!t.empty()) {
      t = block_derivative(t);
      ++steps;
    }
    CHECK(steps == k + 1);
    CHECK(BlockTree::lift(sets).block_index() == k + 1);
    const auto cb = cb_index_finite(min_family(BlockTree::lift(sets)), 10);
    REQUIRE(cb.index);
    CHECK(*cb.index == k + 1);
  }
}

TEST_CASE("inclusion check examples") {
  EnumerateOptions opts;
  opts.bound = 3;
  opts.maximal_only = true;
  const BlockTree f2 = BlockTree::lift(enumerate(Family::fine_schreier(Ordinal::natural(2)), opts));
  CHECK(inclusion_check(f2, 0, 12).holds);
  CHECK(inclusion_check(BlockTree({}, Closure::spreading), 1, 12).holds);
}

TEST_CASE("witness families") {
  const BlockTree chains = gen({{FinSet{1}, FinSet{2}}});
  auto successive_blocks = [](const std::vector<FinSet>& seq) { return is_successive(seq); };
  const auto w = identity_lift_witness(Ordinal::natural(2), 8);
  CHECK(witness_verify(Ordinal::natural(2), w, chains, successive_blocks, 8).ok);
  auto missing = w;
  missing.erase(FinSet{3, 5});
  const WitnessReport r = witness_verify(Ordinal::natural(2), missing, chains, successive_blocks, 8);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_at == FinSet{3, 5});
  CHECK(witness_verify(Ordinal::zero(), std::map<FinSet, FinSet>{}, chains, successive_blocks, 8).ok);
}

TEST_CASE("block tree JSON round trip") {
  const auto j = nlohmann::json::parse(R"({"generators":[[[1],[2,3]]],"closure":"spreading"})");
  const BlockTree t = BlockTree::from_json(j);
  CHECK(t.to_json() == j);
  CHECK_THROWS_AS(BlockTree::from_json(nlohmann::json::parse(R"({"generators":[],"closure":"odd"})")), ParseError);
}
