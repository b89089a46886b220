#include <gtest/gtest.h>

#include "layered/errors.hpp"
#include "layered/oracle.hpp"
#include "test_support.hpp"

namespace layered {
namespace {

using namespace test;

TEST(EnumerateSpanningTrees, SmallGraphs) {
  EXPECT_EQ(oracle::enumerate_spanning_trees(complete_graph(3)).size(), 3u);
  EXPECT_EQ(oracle::enumerate_spanning_trees(path_graph(5)).size(), 1u);
  const auto trees = oracle::enumerate_spanning_trees(fixture_c().graph);
  EXPECT_EQ(Rational(static_cast<long>(trees.size())),
            oracle::count_spanning_trees_matrix_tree(fixture_c().graph));
  EXPECT_EQ(trees.size(), 16u);
  EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
}

TEST(EnumerateSpanningTrees, MatrixTreeAgreesOnCompleteGraphs) {
  for (int n = 1; n <= 6; ++n) {
    const Graph g = complete_graph(n);
    long cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    EXPECT_EQ(oracle::count_spanning_trees_matrix_tree(g), Rational(cayley)) << n;
    EXPECT_EQ(static_cast<long>(oracle::enumerate_spanning_trees(g).size()), cayley) << n;
  }
}

TEST(EnumerateSpanningTrees, DisconnectedGraphHasNone) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(oracle::enumerate_spanning_trees(g).empty());
  EXPECT_EQ(oracle::count_spanning_trees_matrix_tree(g), Rational(0));
}

TEST(SizeGuard, RefusesLargeInputs) {
  const Graph g = path_graph(9);
  EXPECT_THROW(oracle::enumerate_spanning_trees(g), oracle::GuardExceeded);
  oracle::SizeGuard wide;
  wide.max_vertices = 9;
  EXPECT_NO_THROW(oracle::enumerate_spanning_trees(g, wide));
  oracle::SizeGuard narrow;
  narrow.max_edges_for_subset_enum = 2;
  EXPECT_THROW(oracle::rank_bf(oracle::forest_predicate(g), {0, 1, 2}, narrow),
               oracle::GuardExceeded);
}

TEST(SpMembershipBf, Examples) {
  const CorpusInstance c = fixture_c();
  EXPECT_TRUE(oracle::sp_membership_bf(c.graph, c.x));
  EXPECT_TRUE(oracle::sp_membership_bf(path_graph(3), EdgeVector::indicator({0, 1})));
  EdgeVector y = c.x;
  y.set(kAB, Q("5/4"));
  y.set(kSA, Q("1/2"));
  EXPECT_FALSE(oracle::sp_membership_bf(c.graph, y));
}

TEST(RankBf, Examples) {
  EXPECT_EQ(oracle::rank_bf(oracle::forest_predicate(complete_graph(3)), {0, 1, 2}), 2);
  const CorpusInstance c = fixture_c();
  const auto gao = oracle::gao_predicate(c.graph, c.chain, c.graph.all_edges());
  EXPECT_EQ(oracle::rank_bf(gao, {kSB, kST}), 0);
  EXPECT_EQ(oracle::rank_bf(gao, c.x.support()), 3);
}

TEST(SubsetRanks, GraphicMatroidOfATriangle) {
  const Graph k3 = complete_graph(3);
  std::vector<std::uint64_t> bases;
  for (const EdgeSet& t : oracle::enumerate_spanning_trees(k3)) {
    std::uint64_t m = 0;
    for (EdgeId e : t) m |= std::uint64_t{1} << e;
    bases.push_back(m);
  }
  const oracle::SubsetRanks r(3, bases);
  EXPECT_EQ(r.rank(0), 0);
  EXPECT_EQ(r.rank(0b001), 1);
  EXPECT_EQ(r.rank(0b011), 2);
  EXPECT_EQ(r.rank(0b111), 2);
}

TEST(PartitionCondition, FixtureC) {
  const CorpusInstance c = fixture_c();
  EXPECT_TRUE(oracle::partition_condition_bf(c.graph, c.chain, c.x, Q("1/2")).holds);
  const auto at_three_quarters = oracle::partition_condition_bf(c.graph, c.chain, c.x, Q("3/4"));
  EXPECT_TRUE(at_three_quarters.holds);
  EXPECT_EQ(at_three_quarters.minimum, Rational(0));
  const auto beyond = oracle::partition_condition_bf(c.graph, c.chain, c.x, Q("4/5"));
  EXPECT_FALSE(beyond.holds);
  EXPECT_LT(beyond.minimum, Rational(0));
  EXPECT_TRUE(oracle::partition_condition_bf(c.graph, c.chain, c.x, Rational(0)).holds);
}

TEST(PartitionCondition, MinimumMatchesDirectEvaluation) {
  const CorpusInstance c = fixture_c();
  const Rational lambda = Q("9/10");
  const auto r = oracle::partition_condition_bf(c.graph, c.chain, c.x, lambda);
  const auto gao = oracle::gao_predicate(c.graph, c.chain, c.graph.all_edges());
  const auto forest = oracle::forest_predicate(c.graph);
  Rational x_worst;
  for (EdgeId e : r.worst) x_worst += c.x.get(e);
  EXPECT_EQ(r.minimum, lambda * Rational(oracle::rank_bf(gao, r.worst)) +
                           (Rational(1) - lambda) * Rational(oracle::rank_bf(forest, r.worst)) -
                           x_worst);
}

TEST(DeriveChainBf, Fixtures) {
  EXPECT_EQ(oracle::derive_chain_bf(fixture_b().graph, fixture_b().x, kS, kT),
            Chain(4, {{kS}, {kS, kA, kB}}));
  EXPECT_EQ(oracle::derive_chain_bf(fixture_c().graph, fixture_c().x, kS, kT), fixture_c().chain);
  const CorpusInstance a = fixture_a();
  EXPECT_EQ(oracle::derive_chain_bf(a.graph, a.x, 0, 4), a.chain);
}

TEST(TightSetsBf, Fixtures) {
  const CorpusInstance c = fixture_c();
  const auto tight = oracle::tight_sets_bf(c.graph, c.x);
  auto has = [&tight](const VertexSet& u) {
    return std::find(tight.begin(), tight.end(), u) != tight.end();
  };
  const std::vector<VertexSet> expected{{kA, kB}, {kS, kA, kB}, {kA, kB, kT}, {0, 1, 2, 3},
                                       {0},      {1},          {2},          {3}};
  for (const VertexSet& u : expected) {
    EXPECT_TRUE(has(u)) << format_vertex_set(u);
  }
  const auto tb = oracle::tight_sets_bf(fixture_b().graph, fixture_b().x);
  EXPECT_NE(std::find(tb.begin(), tb.end(), VertexSet{kA, kB}), tb.end());

  // Tree indicator: tight exactly where the tree spans U.
  const Graph p = path_graph(4);
  const auto tp = oracle::tight_sets_bf(p, EdgeVector::indicator({0, 1, 2}));
  EXPECT_EQ(tp.size(), 10u);  // the 10 intervals of a 4-path
}

TEST(ExcessBf, ForcedVertex) {
  const CorpusInstance c = fixture_c();
  const auto r = oracle::max_modular_excess_bf(c.graph, c.x, Rational(1), kT);
  for (const VertexSet& u : r.maximizers) EXPECT_TRUE(contains(u, kT));
}

TEST(LambdaMaxBf, Fixtures) {
  const CorpusInstance b = fixture_b();
  EXPECT_EQ(oracle::lambda_max_bf(b.graph, b.x, {kSA, kAB, kAT}), Q("1/2"));
  EXPECT_EQ(oracle::lambda_max_bf(b.graph, b.x, {kSA, kSB, kAT}), Rational(0));
  const CorpusInstance a = fixture_a();
  EXPECT_EQ(oracle::lambda_max_bf(a.graph, a.x, {0, 1, 2, 3}), Rational(1));
}

TEST(IsChainPointBf, Fixtures) {
  for (const CorpusInstance& c : {fixture_a(), fixture_b(), fixture_c()}) {
    EXPECT_TRUE(oracle::is_chain_point_bf(c.graph, c.x, c.chain)) << c.name;
  }
  EXPECT_FALSE(oracle::is_chain_point_bf(fixture_c().graph, fixture_c().x, Chain(4, {{kS, kA}})));
}

}  // namespace
}  // namespace layered
