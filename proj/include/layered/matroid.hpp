#pragma once

#include <map>
#include <vector>

#include "layered/chain.hpp"
#include "layered/graph.hpp"
#include "layered/laminar.hpp"

namespace layered {

class NoGaoTreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// r(X): rank of X in the cycle matroid of the graph.
int rank_graphic(const Graph& graph, const EdgeSet& x);

/// The Gao-tree matroid of a chain on a ground set of edges: the direct sum
/// of the cycle matroids of the level sets and, for every chain cut, the rank-1
/// uniform matroid on its Gao-edges. Edges crossing two or more chain cuts
/// are loops. Bases are exactly the Gao-trees contained in the ground set
/// (when one exists).
class GaoMatroid {
 public:
  enum class Kind { IntraLevel, GaoEdge, Loop };

  GaoMatroid(Graph graph, Chain chain, EdgeSet ground);

  const Graph& graph() const { return graph_; }
  const Chain& chain() const { return chain_; }
  const EdgeSet& ground() const { return ground_; }
  const std::vector<int>& levels() const { return level_; }

  Kind kind(EdgeId e) const;
  /// Level of an intra-level edge or the cut of a Gao-edge; -1 for loops.
  int block(EdgeId e) const;

  /// p(X). Throws InputError if X leaves the ground set.
  int rank(const EdgeSet& x) const;
  bool is_independent(const EdgeSet& x) const;

 private:
  void check_ground(const EdgeSet& x) const;

  Graph graph_;
  Chain chain_;
  EdgeSet ground_;
  std::vector<int> level_;
  std::vector<char> in_ground_;
};

/// Greedy maximum-weight base, edges ordered by (weight desc, id asc).
/// Missing weights count as 0. Throws NoGaoTreeError if the ground set has
/// rank below |V|-1.
Tree max_weight_gao_base(const GaoMatroid& matroid, const std::map<EdgeId, Rational>& weights);

/// Gao-tree inside support(x) spanning every member of a laminar family of
/// tight sets: |T cap E(U)| = |U|-1 for all U in the family.
///
/// Members are processed bottom-up. Inside a member U the levels meeting U
/// must form an interval; every level piece L_i cap U is completed to a tree
/// around the pieces already built for U's children, and every consecutive
/// pair of levels of U receives exactly one Gao-edge, reusing a child's edge
/// when the child already spans both levels. All choices take the smallest
/// edge id. Throws PreconditionViolation when a piece is disconnected, a
/// Gao-edge is missing or two disjoint members compete for the same cut, all
/// of which are impossible for a chain-point and a tight family.
Tree gao_tree_spanning_laminar(const Graph& graph, const EdgeVector& x, const Chain& chain,
                               const LaminarFamily& family);

/// |T cap E(U)| = |U|-1 for every member U.
bool spans_family(const Graph& graph, const Tree& tree, const LaminarFamily& family);

/// Weight "number of family members containing e", used by the greedy
/// cross-check of the constructive builder.
std::map<EdgeId, Rational> laminar_depth_weights(const Graph& graph, const LaminarFamily& family);

}  // namespace layered
