#pragma once

#include <span>
#include <string>
#include <vector>

#include "layered/graph.hpp"
#include "layered/rational.hpp"

namespace layered {

/// Strictly increasing sequence of vertex sets  {} != V_0 < V_1 < ... < V_k < V.
class Chain {
 public:
  /// Throws InputError unless the sets are nonempty, proper and strictly nested.
  Chain(int vertex_count, std::vector<VertexSet> sets);

  int vertex_count() const { return vertex_count_; }
  /// Number of cuts, k + 1.
  int size() const { return static_cast<int>(sets_.size()); }
  const VertexSet& operator[](int i) const { return sets_.at(i); }
  std::span<const VertexSet> sets() const { return sets_; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int vertex_count_;
  std::vector<VertexSet> sets_;
};

/// L_0..L_{k+1}, L_i = V_i \ V_{i-1} with V_{-1} = {} and V_{k+1} = V.
using Levels = std::vector<VertexSet>;

Levels levels_of(const Chain& chain, const Graph& graph);

/// Level index of every vertex.
std::vector<int> level_index(const Chain& chain, const Graph& graph);

/// Number of chain cuts an edge crosses: |level(u) - level(v)|.
int crossing_count(const std::vector<int>& levels, const Edge& edge);

/// Edges of delta(V_q) joining L_q and L_{q+1}, i.e. in no other chain cut.
EdgeSet gao_edges(const Chain& chain, const Graph& graph, int q);

/// Spanning tree meeting every chain cut in exactly one edge.
bool is_gao_tree(const Graph& graph, const Tree& tree, const Chain& chain);

/// x(delta(V_i)) for i = 0..k.
std::vector<Rational> cut_sizes(const Graph& graph, const EdgeVector& x, const Chain& chain);

struct Violation {
  std::string condition;  // "(i)", "(ii)" or "(iii)"
  std::string detail;
};

struct ChainPointReport {
  std::vector<Rational> sizes;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks (i) x in Sp(G); (ii) x(delta(V_0)) = x(delta(V_k)) = 1 and
/// x(delta(V_i)) < 2 for 0 < i < k; (iii) sum_{v in L_i} x(delta(v)) = 2|L_i|
/// for i = 1..k. Every violation is reported with its witness.
ChainPointReport validate_chain_point(const Graph& graph, const EdgeVector& x, const Chain& chain);

/// Narrow-cut chain {A : s in A, t not in A, x(delta(A)) < 2} of an s-t path
/// subtour LP solution.
///
/// Vertices u, v are ordered by pairwise minimum cuts: u precedes v iff the
/// cheapest cut with {s,u} on one side and {v,t} on the other is below 2.
/// Throws InputError when the degree constraints or Sp(G) membership fail and
/// InconsistencyError if the narrow cuts do not nest.
Chain derive_chain(const Graph& graph, const EdgeVector& x, Vertex s, Vertex t);

/// Distinct narrow cut sizes 2-l_1 > 2-l_1-l_2 > ... = 1 and the gaps l_j.
struct LayerThresholds {
  std::vector<Rational> sizes;    // decreasing
  std::vector<Rational> lambdas;  // positive, summing to 1

  int layer_count() const { return static_cast<int>(sizes.size()); }
  /// 2 - (l_1 + ... + l_j), 1-based j.
  const Rational& threshold(int j) const { return sizes.at(j - 1); }
  /// l_1 + ... + l_j, 1-based j.
  Rational prefix_mass(int j) const;

  friend bool operator==(const LayerThresholds&, const LayerThresholds&) = default;
};

/// Throws PreconditionViolation unless the smallest size is exactly 1 and all
/// sizes are below 2.
LayerThresholds layer_thresholds(const Graph& graph, const EdgeVector& x, const Chain& chain);

/// Members of the chain with x(delta(V_i)) <= threshold.
Chain subchain_at(const Graph& graph, const EdgeVector& x, const Chain& chain,
                  const Rational& threshold);

/// Members with x(delta(V_i)) < 2 (the narrow part of the chain).
Chain narrow_subchain(const Graph& graph, const EdgeVector& x, const Chain& chain);

std::string format_vertex_set(const VertexSet& s);

}  // namespace layered
