#pragma once

#include <optional>
#include <string>
#include <variant>

#include "layered/graph.hpp"
#include "layered/rational.hpp"

namespace layered {

/// Result of a spanning-tree-polytope membership query. On failure either
/// `witness` holds a vertex set U with y(E(U)) > |U|-1, or `reason`
/// describes the failed equality y(E) = |V|-1.
struct SpMembership {
  bool member = false;
  std::optional<VertexSet> witness;
  std::string reason;
};

/// y in Sp(G): y >= 0, y(E) = |V|-1 and y(E(U)) <= |U|-1 for every nonempty U.
SpMembership sp_membership(const Graph& graph, const EdgeVector& y);

/// y in cone.Sp(G): y = 0, or y scaled to total |V|-1 lies in Sp(G).
bool cone_membership(const Graph& graph, const EdgeVector& y);

/// x(E(U)) == |U| - 1.
bool is_tight(const Graph& graph, const EdgeVector& x, const VertexSet& u);

// What stopped a peel.
struct Terminal {};                       // the point is the tree itself
struct ZeroedEdges { EdgeSet edges; };    // tree edges whose value reached 0
struct TightSet { VertexSet vertices; };  // a set becoming tight, not spanned by the tree
struct LayerBoundary { std::vector<int> cuts; };  // chain cuts reaching size 2

using Bottleneck = std::variant<Terminal, ZeroedEdges, TightSet, LayerBoundary>;

std::string describe(const Graph& graph, const Bottleneck& bottleneck);

struct LambdaResult {
  Rational lambda;
  Bottleneck bottleneck;
  int newton_steps = 0;
};

/// Largest lambda in [0, 1) such that (x - lambda*T)/(1 - lambda) stays in
/// Sp(G); lambda = 1 with a Terminal bottleneck when x is the tree itself.
///
/// Starts at the nonnegativity cap min_{e in T} x_e and runs a discrete
/// Newton iteration on g(lambda) = max_U x(E(U)) - lambda*|T cap E(U)|
/// - (1-lambda)(|U|-1): while some U violates, lambda drops to the root of
/// that U's affine constraint. Each step strictly decreases lambda and a set
/// binds at most once.
LambdaResult lambda_max(const Graph& graph, const EdgeVector& x, const Tree& tree);

}  // namespace layered
