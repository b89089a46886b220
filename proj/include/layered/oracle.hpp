#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "layered/chain.hpp"
#include "layered/graph.hpp"
#include "layered/rational.hpp"

// Brute-force reference implementations. Nothing here calls the flow,
// matroid or decomposition code it is used to check; levels, cuts and ranks
// are recomputed from their definitions over bitmasks.
namespace layered::oracle {

struct SizeGuard {
  int max_vertices = 8;
  int max_edges_for_subset_enum = 18;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All spanning trees, ordered lexicographically by their sorted edge ids.
std::vector<EdgeSet> enumerate_spanning_trees(const Graph& graph, const SizeGuard& guard = {});

/// Kirchhoff's matrix-tree theorem, determinant by exact Gaussian elimination.
Rational count_spanning_trees_matrix_tree(const Graph& graph);

/// y >= 0, y(E) = |V|-1 and all 2^|V| subset constraints.
bool sp_membership_bf(const Graph& graph, const EdgeVector& y, const SizeGuard& guard = {});

/// Conditions (i)-(iii) checked directly.
bool is_chain_point_bf(const Graph& graph, const EdgeVector& x, const Chain& chain,
                       const SizeGuard& guard = {});

using IndependencePredicate = std::function<bool(const EdgeSet&)>;

/// Largest independent subset of X, by exhaustive search from |X| downwards.
int rank_bf(const IndependencePredicate& independent, const EdgeSet& x,
            const SizeGuard& guard = {});

/// Acyclic edge sets.
IndependencePredicate forest_predicate(const Graph& graph);

/// Gao-trees of the graph for the chain: spanning trees crossing every chain
/// cut exactly once (crossings counted from the vertex sets).
std::vector<EdgeSet> gao_trees_bf(const Graph& graph, const Chain& chain,
                                  const EdgeSet& ground, const SizeGuard& guard = {});

/// Subsets of some Gao-tree inside `ground`.
IndependencePredicate gao_predicate(const Graph& graph, const Chain& chain, const EdgeSet& ground,
                                    const SizeGuard& guard = {});

/// Rank of every subset of an edge list, from the bases of a matroid:
/// independent = contained in a base, rank by dynamic programming.
class SubsetRanks {
 public:
  SubsetRanks(int edge_count, const std::vector<std::uint64_t>& bases);
  int rank(std::uint64_t subset) const { return rank_[subset]; }

 private:
  std::vector<std::uint8_t> rank_;
};

struct PartitionCondition {
  bool holds = false;
  EdgeSet worst;     // a minimizer of lambda*p(X) + (1-lambda)*r(X) - x(X)
  Rational minimum;  // the minimum value
};

/// min over all X of lambda*p(X) + (1-lambda)*r(X) - x(X), with p the rank of
/// the Gao-tree matroid of G (bases: Gao-trees of G) and r the graphic rank.
PartitionCondition partition_condition_bf(const Graph& graph, const Chain& chain,
                                          const EdgeVector& x, const Rational& lambda,
                                          const SizeGuard& guard = {});

/// Every A with s in A, t not in A and x(delta(A)) < 2, checked to nest.
/// Throws InconsistencyError if two such sets cross.
Chain derive_chain_bf(const Graph& graph, const EdgeVector& x, Vertex s, Vertex t,
                      const SizeGuard& guard = {});

/// All nonempty U with x(E(U)) = |U|-1, ordered by bitmask.
std::vector<VertexSet> tight_sets_bf(const Graph& graph, const EdgeVector& x,
                                     const SizeGuard& guard = {});

struct ExcessBf {
  Rational value;
  std::vector<VertexSet> maximizers;
};

/// max over nonempty U (containing `forced` if >= 0) of y(E(U)) - kappa*|U|.
ExcessBf max_modular_excess_bf(const Graph& graph, const EdgeVector& y, const Rational& kappa,
                               Vertex forced = -1, const SizeGuard& guard = {});

/// Largest lambda in [0,1] with (x - lambda*T)/(1-lambda) in Sp(G), from the
/// closed form min(min_{e in T} x_e, min_U ratio_U) over all vertex sets.
Rational lambda_max_bf(const Graph& graph, const EdgeVector& x, const EdgeSet& tree,
                       const SizeGuard& guard = {});

}  // namespace layered::oracle
