#include "layered/agreement.hpp"

#include <algorithm>

#include "layered/decompose.hpp"
#include "layered/errors.hpp"
#include "layered/flow.hpp"
#include "layered/matroid.hpp"
#include "layered/oracle.hpp"
#include "layered/polytope.hpp"

namespace layered {

namespace {

std::uint64_t mask_in(const EdgeSet& items, const EdgeSet& ground) {
  std::uint64_t m = 0;
  for (EdgeId e : items) {
    const auto it = std::lower_bound(ground.begin(), ground.end(), e);
    m |= std::uint64_t{1} << (it - ground.begin());
  }
  return m;
}

}  // namespace

std::vector<std::string> check_agreement(const CorpusInstance& instance) {
  std::vector<std::string> out;
  const Graph& graph = instance.graph;
  const EdgeVector& x = instance.x;
  const Chain& chain = instance.chain;
  const int n = graph.vertex_count();

  const auto trees = oracle::enumerate_spanning_trees(graph);
  const Rational counted(static_cast<long>(trees.size()));
  if (counted != oracle::count_spanning_trees_matrix_tree(graph)) {
    out.push_back("tree count: enumeration and matrix-tree disagree");
  }
  if (sp_membership(graph, x).member != oracle::sp_membership_bf(graph, x)) {
    out.push_back("sp_membership disagrees");
  }
  const bool chain_point = validate_chain_point(graph, x, chain).passed();
  if (chain_point != oracle::is_chain_point_bf(graph, x, chain)) {
    out.push_back("validate_chain_point disagrees");
  }
  if (instance.s && instance.t) {
    const Chain main = derive_chain(graph, x, *instance.s, *instance.t);
    if (!(main == oracle::derive_chain_bf(graph, x, *instance.s, *instance.t))) {
      out.push_back("derive_chain disagrees");
    }
  }

  const auto tight = oracle::tight_sets_bf(graph, x);
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
    VertexSet set;
    for (Vertex v = 0; v < n; ++v) {
      if ((u >> v) & 1) set.push_back(v);
    }
    const bool expected = std::find(tight.begin(), tight.end(), set) != tight.end();
    if (is_tight(graph, x, set) != expected) {
      out.push_back("is_tight disagrees on " + format_vertex_set(set));
    }
  }

  for (Vertex forced = -1; forced < n; ++forced) {
    const Rational kappa(1);
    const ExcessResult main = forced < 0 ? max_modular_excess(graph, x, kappa)
                                         : max_modular_excess(graph, x, kappa, forced);
    const oracle::ExcessBf bf = oracle::max_modular_excess_bf(graph, x, kappa, forced);
    if (main.value != bf.value ||
        std::find(bf.maximizers.begin(), bf.maximizers.end(), main.argmax) ==
            bf.maximizers.end()) {
      out.push_back("max_modular_excess disagrees (forced " + std::to_string(forced) + ")");
    }
  }

  const EdgeSet support = x.support();
  const auto gao_in_support = oracle::gao_trees_bf(graph, chain, support);
  try {
    const Tree built = gao_tree_spanning_laminar(graph, x, chain, LaminarFamily(n));
    if (std::find(gao_in_support.begin(), gao_in_support.end(), built.edges()) ==
        gao_in_support.end()) {
      out.push_back("laminar builder returned a tree that is not a Gao-tree in the support");
    }
  } catch (const std::exception& e) {
    out.push_back(std::string("laminar builder failed: ") + e.what());
  }

  if (support.size() <= 14) {
    std::vector<std::uint64_t> bases;
    for (const EdgeSet& t : gao_in_support) bases.push_back(mask_in(t, support));
    const oracle::SubsetRanks ranks(static_cast<int>(support.size()), bases);
    const GaoMatroid matroid(graph, chain, support);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << support.size()); ++m) {
      EdgeSet subset;
      for (std::size_t i = 0; i < support.size(); ++i) {
        if ((m >> i) & 1) subset.push_back(support[i]);
      }
      if (matroid.rank(subset) != ranks.rank(m)) {
        out.push_back("Gao rank disagrees on a subset of the support");
        break;
      }
    }
  }

  const std::size_t sample = std::min<std::size_t>(gao_in_support.size(), 6);
  for (std::size_t i = 0; i < sample; ++i) {
    const Tree tree(graph, gao_in_support[i]);
    if (lambda_max(graph, x, tree).lambda != oracle::lambda_max_bf(graph, x, tree.edges())) {
      out.push_back("lambda_max disagrees for a Gao-tree of the support");
    }
  }

  try {
    const LayeredDecomposition d = layered_decompose(graph, x, chain);
    if (!verify_layered(graph, x, chain, d).passed()) out.push_back("decomposition fails verify");
  } catch (const std::exception& e) {
    out.push_back(std::string("layered_decompose failed: ") + e.what());
  }
  return out;
}

}  // namespace layered
