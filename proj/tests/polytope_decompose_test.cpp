#include <gtest/gtest.h>

#include "layered/decompose.hpp"
#include "layered/errors.hpp"
#include "layered/oracle.hpp"
#include "layered/polytope.hpp"
#include "test_support.hpp"

namespace layered {
namespace {

using namespace test;

TEST(SpMembership, Examples) {
  const Graph p = path_graph(4);
  EXPECT_TRUE(sp_membership(p, EdgeVector::indicator({0, 1, 2})).member);
  const CorpusInstance c = fixture_c();
  EXPECT_TRUE(sp_membership(c.graph, c.x).member);

  EdgeVector y = c.x;
  y.set(kAB, Q("5/4"));
  y.set(kSA, Q("1/2"));
  const SpMembership r = sp_membership(c.graph, y);
  EXPECT_FALSE(r.member);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (VertexSet{kA, kB}));
  EXPECT_FALSE(oracle::sp_membership_bf(c.graph, y));
}

TEST(SpMembership, TotalMustBeNMinusOne) {
  const CorpusInstance c = fixture_c();
  EdgeVector y = c.x;
  y.set(kST, Q("1/4"));
  const SpMembership r = sp_membership(c.graph, y);
  EXPECT_FALSE(r.member);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(ConeMembership, Examples) {
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(cone_membership(k3, EdgeVector()));
  EdgeVector triple;
  for (EdgeId e : {0, 1}) triple.set(e, Rational(3));
  EXPECT_TRUE(cone_membership(k3, triple));
  EXPECT_TRUE(cone_membership(k3, EdgeVector::indicator({0, 1, 2})));
  EXPECT_FALSE(cone_membership(k3, EdgeVector::indicator({0})));
}

TEST(IsTight, FixtureC) {
  const CorpusInstance c = fixture_c();
  EXPECT_TRUE(is_tight(c.graph, c.x, {kA, kB}));
  EXPECT_TRUE(is_tight(c.graph, c.x, {kS, kA, kB}));
  EXPECT_TRUE(is_tight(c.graph, c.x, {kA, kB, kT}));
  EXPECT_TRUE(is_tight(c.graph, c.x, {kS}));
  EXPECT_FALSE(is_tight(c.graph, c.x, {kS, kA}));
  const auto bf = oracle::tight_sets_bf(c.graph, c.x);
  const std::vector<VertexSet> expected{{kA, kB}, {kS, kA, kB}, {kA, kB, kT}, {0, 1, 2, 3}};
  for (const VertexSet& u : expected) {
    EXPECT_NE(std::find(bf.begin(), bf.end(), u), bf.end());
  }
}

TEST(LambdaMax, IntegralPointIsTerminal) {
  const CorpusInstance a = fixture_a();
  const LambdaResult r = lambda_max(a.graph, a.x, Tree(a.graph, {0, 1, 2, 3}));
  EXPECT_EQ(r.lambda, Rational(1));
  EXPECT_TRUE(std::holds_alternative<Terminal>(r.bottleneck));
}

TEST(LambdaMax, FixtureCIsLimitedByNonnegativity) {
  const CorpusInstance c = fixture_c();
  const Tree t(c.graph, {kSA, kAB, kBT});
  const LambdaResult r = lambda_max(c.graph, c.x, t);
  EXPECT_EQ(r.lambda, Q("3/4"));
  EXPECT_EQ(r.lambda, oracle::lambda_max_bf(c.graph, c.x, t.edges()));
}

TEST(LambdaMax, TwoTreeMixture) {
  const CorpusInstance b = fixture_b();
  const Tree t1(b.graph, {kSA, kAB, kAT});
  const LambdaResult r = lambda_max(b.graph, b.x, t1);
  EXPECT_EQ(r.lambda, Q("1/2"));
  const auto* zeroed = std::get_if<ZeroedEdges>(&r.bottleneck);
  ASSERT_NE(zeroed, nullptr);
  EXPECT_EQ(zeroed->edges, (EdgeSet{kSA, kAT}));
}

TEST(LambdaMax, TreeOutsideSupport) {
  const CorpusInstance c = fixture_c();
  EXPECT_THROW(lambda_max(c.graph, c.x, Tree(c.graph, {kST, kAB, kBT})), InputError);
}

TEST(LambdaMax, ZeroWhenATightSetIsNotSpanned) {
  // {a,b} is tight in Fixture B; a tree avoiding ab cannot be peeled at all.
  const CorpusInstance b = fixture_b();
  const Tree t(b.graph, {kSA, kSB, kAT});
  const LambdaResult r = lambda_max(b.graph, b.x, t);
  EXPECT_EQ(r.lambda, Rational(0));
  const auto* tight = std::get_if<TightSet>(&r.bottleneck);
  ASSERT_NE(tight, nullptr);
  EXPECT_TRUE(is_tight(b.graph, b.x, tight->vertices));
  EXPECT_EQ(r.lambda, oracle::lambda_max_bf(b.graph, b.x, t.edges()));
}

TEST(PeelStep, FixtureCStopsAtTheLayerBoundary) {
  const CorpusInstance c = fixture_c();
  const PeelOutcome out = peel_step(c.graph, c.x, c.chain, LaminarFamily(4));
  EXPECT_EQ(out.record.tree.edges(), (EdgeSet{kSA, kAB, kBT}));
  EXPECT_EQ(out.record.epsilon, Q("1/2"));
  EXPECT_TRUE(out.record.closes_layer);
  const auto* boundary = std::get_if<LayerBoundary>(&out.record.bottleneck);
  ASSERT_NE(boundary, nullptr);
  EXPECT_EQ(boundary->cuts, std::vector<int>{1});
  EXPECT_EQ(out.next, fixture_b().x);
}

TEST(PeelStep, FixtureBWithTightPair) {
  const CorpusInstance b = fixture_b();
  const LaminarFamily f(4, {{kA, kB}});
  const PeelOutcome out = peel_step(b.graph, b.x, b.chain, f);
  EXPECT_EQ(out.record.tree.edges(), (EdgeSet{kSA, kAB, kAT}));
  EXPECT_EQ(out.record.epsilon, Q("1/2"));
  EXPECT_EQ(out.next, EdgeVector::indicator({kSB, kAB, kBT}));
}

TEST(PeelStep, IntegralPointIsTerminal) {
  const CorpusInstance a = fixture_a();
  const PeelOutcome out = peel_step(a.graph, a.x, a.chain, LaminarFamily(5));
  EXPECT_TRUE(std::holds_alternative<Terminal>(out.record.bottleneck));
  EXPECT_EQ(out.record.epsilon, Rational(1));
}

TEST(PeelStep, PreferredTreeIsReusedWhenAdmissible) {
  const CorpusInstance b = fixture_b();
  const Tree other(b.graph, {kSB, kAB, kBT});
  const PeelOutcome out = peel_step(b.graph, b.x, b.chain, LaminarFamily(4), other);
  EXPECT_EQ(out.record.tree, other);
  // Outside the support: ignored.
  const Tree outside(b.graph, {kST, kAB, kSA});
  EXPECT_NE(peel_step(b.graph, b.x, b.chain, LaminarFamily(4), outside).record.tree, outside);
}

TEST(LayeredDecompose, FixtureC) {
  const CorpusInstance c = fixture_c();
  const LayeredDecomposition d = layered_decompose(c.graph, c.x, c.chain);
  EXPECT_EQ(d.thresholds.lambdas, (std::vector<Rational>{Q("1/2"), Q("1/2")}));
  const auto merged = d.by_tree_and_layer();
  ASSERT_EQ(merged.size(), 3u);
  EXPECT_EQ(merged[0].layer, 1);
  EXPECT_EQ(merged[0].tree.edges(), (EdgeSet{kSA, kAB, kBT}));
  EXPECT_EQ(merged[0].coefficient, Q("1/2"));
  const auto per_tree = d.by_tree();
  ASSERT_EQ(per_tree.size(), 2u);
  EXPECT_EQ(per_tree[0].first.edges(), (EdgeSet{kSA, kAB, kBT}));
  EXPECT_EQ(per_tree[0].second, Q("3/4"));
  EXPECT_EQ(per_tree[1].first.edges(), (EdgeSet{kSB, kAB, kAT}));
  EXPECT_EQ(per_tree[1].second, Q("1/4"));
}

TEST(LayeredDecompose, GaoTreeIndicator) {
  const CorpusInstance a = fixture_a();
  const LayeredDecomposition d = layered_decompose(a.graph, a.x, a.chain);
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms[0].coefficient, Rational(1));
  EXPECT_EQ(d.terms[0].layer, 1);
}

TEST(LayeredDecompose, FixtureB) {
  const CorpusInstance b = fixture_b();
  const LayeredDecomposition d = layered_decompose(b.graph, b.x, b.chain);
  ASSERT_EQ(d.terms.size(), 2u);
  for (const LayeredTerm& t : d.terms) {
    EXPECT_EQ(t.coefficient, Q("1/2"));
    EXPECT_EQ(t.layer, 1);
  }
}

TEST(LayeredDecompose, RejectsNonChainPoints) {
  const CorpusInstance c = fixture_c();
  EXPECT_THROW(layered_decompose(c.graph, c.x, Chain(4, {{kS, kA}})), PreconditionViolation);
}

TEST(LayeredDecompose, TraceRecordsEveryPeel) {
  const CorpusInstance c = fixture_c();
  std::vector<PeelRecord> trace;
  DecomposeOptions options;
  options.trace = &trace;
  options.check_peeling_invariant = true;
  layered_decompose(c.graph, c.x, c.chain, options);
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<LayerBoundary>(trace[0].bottleneck));
  EXPECT_TRUE(std::holds_alternative<Terminal>(trace[2].bottleneck));
  EXPECT_EQ(describe(c.graph, trace[2].bottleneck), "terminal");
}

LayeredDecomposition manual(const Graph& g, const LayerThresholds& th,
                            std::vector<std::tuple<const char*, int, EdgeSet>> terms) {
  LayeredDecomposition d;
  d.thresholds = th;
  for (auto& [coef, layer, edges] : terms) d.terms.push_back({Q(coef), Tree(g, edges), layer});
  return d;
}

TEST(VerifyLayered, FixtureCPasses) {
  const CorpusInstance c = fixture_c();
  const VerifyReport r =
      verify_layered(c.graph, c.x, c.chain, layered_decompose(c.graph, c.x, c.chain));
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.gao_prefix_mass.size(), 2u);
  EXPECT_EQ(r.gao_prefix_mass[0], Q("3/4"));
}

TEST(VerifyLayered, SwappedCoefficientsFailPrefixMass) {
  const CorpusInstance c = fixture_c();
  const LayerThresholds th = layer_thresholds(c.graph, c.x, c.chain);
  const auto d = manual(c.graph, th, {{"1/4", 1, {kSA, kAB, kBT}}, {"3/4", 2, {kSB, kAB, kAT}}});
  const VerifyReport r = verify_layered(c.graph, c.x, c.chain, d);
  EXPECT_FALSE(r.passed());
  bool prefix = false;
  for (const VerifyFailure& f : r.failures) {
    if (f.check == "prefix-mass") {
      prefix = true;
      EXPECT_NE(f.detail.find("layer 1"), std::string::npos);
    }
  }
  EXPECT_TRUE(prefix);
}

TEST(VerifyLayered, DetectsEachKindOfDefect) {
  const CorpusInstance c = fixture_c();
  const LayerThresholds th = layer_thresholds(c.graph, c.x, c.chain);
  auto failed = [&](const LayeredDecomposition& d, const std::string& check) {
    for (const VerifyFailure& f : verify_layered(c.graph, c.x, c.chain, d).failures) {
      if (f.check == check) return true;
    }
    return false;
  };
  // Sum below one.
  EXPECT_TRUE(failed(manual(c.graph, th, {{"1/2", 1, {kSA, kAB, kBT}}}), "sum"));
  // Right masses, wrong trees.
  EXPECT_TRUE(failed(
      manual(c.graph, th, {{"1/2", 1, {kSA, kAB, kBT}}, {"1/2", 2, {kSB, kAB, kAT}}}),
      "recombination"));
  // A non-Gao tree in layer 1.
  EXPECT_TRUE(failed(
      manual(c.graph, th, {{"3/4", 2, {kSA, kAB, kBT}}, {"1/4", 1, {kSB, kAB, kAT}}}), "gao"));
  // Layer out of range.
  EXPECT_TRUE(failed(manual(c.graph, th, {{"1", 3, {kSA, kAB, kBT}}}), "layer"));
  // Declared thresholds differ.
  LayerThresholds wrong = th;
  wrong.lambdas = {Rational(1)};
  wrong.sizes = {Rational(1)};
  EXPECT_TRUE(failed(manual(c.graph, wrong, {{"1", 1, {kSA, kAB, kBT}}}), "thresholds"));
}

TEST(VerifyLayered, IntegralGaoTree) {
  const CorpusInstance a = fixture_a();
  const auto d = manual(a.graph, layer_thresholds(a.graph, a.x, a.chain), {{"1", 1, {0, 1, 2, 3}}});
  EXPECT_TRUE(verify_layered(a.graph, a.x, a.chain, d).passed());
}

TEST(SuitabilityEpsilon, Examples) {
  const CorpusInstance c = fixture_c();
  EXPECT_EQ(suitability_epsilon(c.graph, c.x, c.chain, {kSB}), Q("3/4"));
  EXPECT_EQ(suitability_epsilon(c.graph, c.x, c.chain, {kST}), Rational(1));
  EXPECT_THROW(suitability_epsilon(c.graph, c.x, c.chain, {}), SuitabilityUndefined);
}

}  // namespace
}  // namespace layered
