#include <gtest/gtest.h>

#include <sstream>

#include "layered/errors.hpp"
#include "layered/graph.hpp"
#include "layered/rational.hpp"
#include "test_support.hpp"

namespace layered {
namespace {

using test::Q;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Q("6/8"), Rational(3, 4));
  EXPECT_EQ(Q("6/8").to_string(), "3/4");
  EXPECT_EQ(Q("-2/4").to_string(), "-1/2");
  EXPECT_EQ(Q("4/2").to_string(), "2");
  EXPECT_EQ(Q("0").to_string(), "0");
  EXPECT_TRUE(Q("4/2").is_integer());
  EXPECT_FALSE(Q("1/3").is_integer());
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1//2", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, ArithmeticIsExact) {
  Rational sum;
  for (int i = 0; i < 3; ++i) sum += Rational(1, 3);
  EXPECT_EQ(sum, Rational(1));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3) - Rational(1, 3), Rational(0));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
  EXPECT_LT(Rational(2, 3), Rational(3, 4));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  std::ostringstream out;
  out << Rational(-5, 10);
  EXPECT_EQ(out.str(), "-1/2");
}

TEST(Graph, RejectsNonSimpleInput) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_NO_THROW(Graph(1, {}));
}

TEST(Graph, EdgeLookupAndLabels) {
  const Graph g = fixture_c().graph;
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(g.find_edge(test::kT, test::kA), std::optional<EdgeId>(test::kAT));
  EXPECT_FALSE(test::path_graph(3).find_edge(0, 2).has_value());
  EXPECT_EQ(g.edge_label(test::kST), "0-3");
  EXPECT_THROW(g.check_edge(6), InputError);
}

TEST(EdgeVector, StoresSupportOnly) {
  EdgeVector x;
  x.set(2, Q("1/2"));
  x.set(3, Q("0"));
  EXPECT_EQ(x.support(), EdgeSet{2});
  EXPECT_EQ(x.get(3), Rational(0));
  x.set(2, Rational(0));
  EXPECT_TRUE(x.support().empty());
  EXPECT_THROW(x.set(1, Q("-1/2")), InputError);
}

TEST(SumOver, Examples) {
  const Graph g = test::path_graph(3);
  const EdgeVector halves = test::values({{0, "1/2"}, {1, "1/2"}});
  EXPECT_EQ(sum_over(g, halves, {0, 1}), Rational(1));
  EXPECT_EQ(sum_over(g, halves, {}), Rational(0));
  const CorpusInstance c = fixture_c();
  EXPECT_EQ(sum_over(c.graph, c.x, c.graph.all_edges()), Rational(3));
  EXPECT_THROW(sum_over(g, halves, {7}), InputError);
}

TEST(Cut, Examples) {
  using namespace test;
  EXPECT_EQ(cut(path_graph(3), {0}), EdgeSet{0});
  const Graph g = fixture_c().graph;
  EXPECT_EQ(cut(g, {kS, kA}), (EdgeSet{kSB, kAB, kAT, kST}));
  const Graph k4 = complete_graph(4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) EXPECT_EQ(cut(k4, {u, v}).size(), 4u);
  }
  EXPECT_THROW(cut(g, {}), InputError);
  EXPECT_THROW(cut(g, {0, 1, 2, 3}), InputError);
}

TEST(CutBetween, CountsOnlyEdgesAcrossTheTwoSides) {
  using namespace test;
  const Graph g = fixture_c().graph;
  EXPECT_EQ(cut_between(g, {kS}, {kB, kT}), (EdgeSet{kSB, kST}));
}

TEST(InducedEdges, Examples) {
  using namespace test;
  const Graph g = fixture_c().graph;
  EXPECT_TRUE(induced_edges(g, {kA}).empty());
  EXPECT_EQ(induced_edges(g, {kS, kA, kB}), (EdgeSet{kSA, kSB, kAB}));
  EXPECT_EQ(induced_edges(g, g.all_vertices()), g.all_edges());
}

TEST(Components, Examples) {
  using namespace test;
  EXPECT_EQ(components(path_graph(3), {0, 1, 2}, {}),
            (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_EQ(components(path_graph(4), {0, 1, 2, 3}, {0, 1, 2}).size(), 1u);
  const Graph g = fixture_c().graph;
  EXPECT_EQ(components(g, g.all_vertices(), {kSA, kBT}),
            (std::vector<VertexSet>{{kS, kA}, {kB, kT}}));
}

TEST(SpanningTree, Examples) {
  using namespace test;
  EXPECT_TRUE(is_spanning_tree(path_graph(4), {0, 1, 2}));
  EXPECT_FALSE(is_spanning_tree(path_graph(4), {0, 1}));
  const Graph g = fixture_c().graph;
  EXPECT_TRUE(is_spanning_tree(g, {kSA, kAB, kBT}));
  EXPECT_FALSE(is_spanning_tree(g, {kSA, kSB, kAB}));
  EXPECT_THROW(Tree(g, {kSA, kSB, kAB}), InputError);
  EXPECT_EQ(covered_vertices(g, {kSA, kBT}), (VertexSet{kS, kA, kB, kT}));
}

TEST(VertexSets, Operations) {
  EXPECT_EQ(make_vertex_set({3, 1, 3}), (VertexSet{1, 3}));
  EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(set_intersection({1, 3}, {2, 3}), (VertexSet{3}));
  EXPECT_EQ(set_difference({1, 3}, {2, 3}), (VertexSet{1}));
  EXPECT_TRUE(is_subset({1}, {1, 2}));
  EXPECT_FALSE(is_subset({0}, {1, 2}));
}

}  // namespace
}  // namespace layered
