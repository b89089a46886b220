#include <gtest/gtest.h>

#include "layered/errors.hpp"
#include "layered/laminar.hpp"
#include "layered/matroid.hpp"
#include "layered/oracle.hpp"
#include "test_support.hpp"

namespace layered {
namespace {

using namespace test;

TEST(LaminarFamily, StartsWithVAndSkipsSingletons) {
  const LaminarFamily f(4);
  EXPECT_EQ(f.size(), 1);
  EXPECT_TRUE(f.contains({0, 1, 2, 3}));
  const LaminarFamily g(4, {{1}, {0, 1}, {2, 3}});
  EXPECT_EQ(g.size(), 3);
  EXPECT_FALSE(g.contains({1}));
  EXPECT_THROW(LaminarFamily(4, {{0, 1}, {1, 2}}), InputError);
}

TEST(Crosses, Definition) {
  EXPECT_TRUE(crosses({0, 1}, {1, 2}));
  EXPECT_FALSE(crosses({0, 1}, {0, 1, 2}));
  EXPECT_FALSE(crosses({0, 1}, {2, 3}));
}

TEST(UncrossInsert, NothingCrossesV) {
  const CorpusInstance b = fixture_b();
  const LaminarFamily f = uncross_insert(b.graph, LaminarFamily(4), {kA, kB}, b.x);
  EXPECT_EQ(f, LaminarFamily(4, {{kA, kB}}));
  EXPECT_EQ(uncross_insert(b.graph, f, {kA, kB}, b.x), f);
}

TEST(UncrossInsert, CrossingPairIsReplacedByMeetAndJoin) {
  // Path a-b-c-d-e: every interval is tight.
  const Graph g = path_graph(5);
  const EdgeVector x = EdgeVector::indicator({0, 1, 2, 3});
  const LaminarFamily start(5, {{0, 1, 2}});
  const LaminarFamily f = uncross_insert(g, start, {1, 2, 3}, x);
  EXPECT_EQ(f, LaminarFamily(5, {{0, 1, 2}, {1, 2}, {0, 1, 2, 3}}));
  const auto tight = oracle::tight_sets_bf(g, x);
  for (const VertexSet& m : f.members()) {
    EXPECT_NE(std::find(tight.begin(), tight.end(), m), tight.end());
  }
}

TEST(UncrossInsert, RejectsNonTightSets) {
  const CorpusInstance c = fixture_c();
  EXPECT_THROW(uncross_insert(c.graph, LaminarFamily(4), {kS, kT}, c.x), PreconditionViolation);
}

TEST(RankGraphic, Examples) {
  const CorpusInstance c = fixture_c();
  EXPECT_EQ(rank_graphic(c.graph, {kSA, kAB, kBT}), 3);
  EXPECT_EQ(rank_graphic(complete_graph(3), {0, 1, 2}), 2);
  EXPECT_EQ(rank_graphic(c.graph, {kSA, kSB, kAB, kAT}), 3);
  EXPECT_EQ(rank_graphic(c.graph, {}), 0);
}

TEST(GaoMatroid, KindsAndRanks) {
  const CorpusInstance c = fixture_c();
  const GaoMatroid m(c.graph, c.chain, c.graph.all_edges());
  EXPECT_EQ(m.kind(kSA), GaoMatroid::Kind::GaoEdge);
  EXPECT_EQ(m.kind(kSB), GaoMatroid::Kind::Loop);
  EXPECT_EQ(m.kind(kST), GaoMatroid::Kind::Loop);
  EXPECT_EQ(m.rank({kSA, kAB, kBT}), 3);
  EXPECT_EQ(m.rank({kSB}), 0);
  EXPECT_EQ(rank_graphic(c.graph, {kSB}), 1);
  EXPECT_EQ(m.rank({kSA, kAB}), 2);
  EXPECT_TRUE(m.is_independent({}));
  EXPECT_TRUE(m.is_independent({kSA, kAB, kBT}));
  EXPECT_FALSE(m.is_independent({kSA, kST}));

  const GaoMatroid on_support(c.graph, c.chain, c.x.support());
  EXPECT_THROW(on_support.rank({kST}), InputError);
}

TEST(GaoMatroid, IntraLevelEdgesFormAGraphicBlock) {
  const CorpusInstance b = fixture_b();
  const GaoMatroid m(b.graph, b.chain, b.graph.all_edges());
  EXPECT_EQ(m.kind(kAB), GaoMatroid::Kind::IntraLevel);
  EXPECT_EQ(m.rank({kSA, kSB}), 1);  // both Gao-edges of the cut at {s}
  EXPECT_EQ(m.rank({kSA, kAB, kBT, kAT}), 3);
}

TEST(GaoMatroid, RanksMatchTheGaoTreeOracle) {
  for (const CorpusInstance& c : {fixture_a(), fixture_b(), fixture_c()}) {
    const EdgeSet all = c.graph.all_edges();
    const GaoMatroid m(c.graph, c.chain, all);
    const auto independent = oracle::gao_predicate(c.graph, c.chain, all);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      EdgeSet x;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1) x.push_back(all[i]);
      }
      ASSERT_EQ(m.rank(x), oracle::rank_bf(independent, x)) << c.name << " mask " << mask;
      ASSERT_LE(m.rank(x), rank_graphic(c.graph, x));
    }
  }
}

TEST(MaxWeightGaoBase, EqualWeightsUseIdOrder) {
  const CorpusInstance c = fixture_c();
  const GaoMatroid m(c.graph, c.chain, c.x.support());
  std::map<EdgeId, Rational> w;
  for (EdgeId e : c.x.support()) w[e] = Rational(1);
  EXPECT_EQ(max_weight_gao_base(m, w).edges(), (EdgeSet{kSA, kAB, kBT}));
}

TEST(MaxWeightGaoBase, HeavyTreeWins) {
  const CorpusInstance b = fixture_b();
  const GaoMatroid m(b.graph, b.chain, b.graph.all_edges());
  std::map<EdgeId, Rational> w;
  for (EdgeId e : b.graph.all_edges()) w[e] = Rational(1);
  for (EdgeId e : {kSB, kAB, kAT}) w[e] = Rational(100);
  EXPECT_EQ(max_weight_gao_base(m, w).edges(), (EdgeSet{kSB, kAB, kAT}));
}

TEST(MaxWeightGaoBase, RankDeficientGroundSet) {
  const CorpusInstance c = fixture_c();
  const GaoMatroid m(c.graph, c.chain, {kSA, kSB, kAT, kBT, kST});
  EXPECT_THROW(max_weight_gao_base(m, {}), NoGaoTreeError);
}

TEST(GaoTreeSpanningLaminar, Examples) {
  const CorpusInstance c = fixture_c();
  const Tree t = gao_tree_spanning_laminar(c.graph, c.x, c.chain, LaminarFamily(4));
  EXPECT_EQ(t.edges(), (EdgeSet{kSA, kAB, kBT}));

  const CorpusInstance b = fixture_b();
  const LaminarFamily f(4, {{kA, kB}});
  const Tree tb = gao_tree_spanning_laminar(b.graph, b.x, b.chain, f);
  EXPECT_TRUE(tb.contains(kAB));
  EXPECT_TRUE(is_gao_tree(b.graph, tb, b.chain));
  EXPECT_TRUE(spans_family(b.graph, tb, f));
  EXPECT_EQ(tb.edges(), (EdgeSet{kSA, kAB, kAT}));
}

TEST(GaoTreeSpanningLaminar, MatchesMaxWeightCrossCheck) {
  const CorpusInstance b = fixture_b();
  const LaminarFamily f(4, {{kA, kB}});
  const GaoMatroid m(b.graph, b.chain, b.x.support());
  const Tree greedy = max_weight_gao_base(m, laminar_depth_weights(b.graph, f));
  EXPECT_TRUE(spans_family(b.graph, greedy, f));
}

TEST(GaoTreeSpanningLaminar, FailsWhenSupportHasNoGaoTree) {
  // The support misses the only edge leaving {0}.
  const Graph g = path_graph(3);
  const EdgeVector x = EdgeVector::indicator({1});
  EXPECT_THROW(gao_tree_spanning_laminar(g, x, Chain(3, {{0}}), LaminarFamily(3)),
               PreconditionViolation);
}

}  // namespace
}  // namespace layered
