#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "layered/chain.hpp"
#include "layered/graph.hpp"
#include "layered/laminar.hpp"
#include "layered/polytope.hpp"

namespace layered {

/// One peel: a fraction `epsilon` of the current point is a Gao-tree.
struct PeelRecord {
  Rational epsilon;
  Tree tree;
  Bottleneck bottleneck;
  /// The peel stopped exactly where the largest narrow cut reaches size 2.
  bool closes_layer = false;
  /// Filled in by layered_decompose: 1-based layer and global coefficient.
  int layer = 0;
  Rational coefficient;
};

struct PeelOutcome {
  PeelRecord record;
  EdgeVector next;  // (x - epsilon*T)/(1 - epsilon); x itself when epsilon = 0
  LaminarFamily family;
};

/// Peels one Gao-tree off a chain-point.
///
/// The tree is a Gao-tree for the narrow part {V_i : x(delta(V_i)) < 2} of
/// `chain`, spanning every member of `family`: `preferred` when it still
/// qualifies, otherwise the constructive laminar builder. The peeled fraction
/// is min(lambda_max, 2 - largest narrow cut size), so a layer is never
/// overshot. A tight set that stops the peel is uncrossed into the family;
/// when that happens at epsilon = 0 nothing is peeled.
PeelOutcome peel_step(const Graph& graph, const EdgeVector& x, const Chain& chain,
                      const LaminarFamily& family, const std::optional<Tree>& preferred = {});

struct LayeredTerm {
  Rational coefficient;
  Tree tree;
  int layer;  // 1-based
};

struct LayeredDecomposition {
  LayerThresholds thresholds;
  /// In extraction order (one term per peel with positive mass).
  std::vector<LayeredTerm> terms;

  /// Terms merged per (tree, layer), ordered by layer then tree.
  std::vector<LayeredTerm> by_tree_and_layer() const;
  /// Total coefficient per tree, ordered by tree.
  std::vector<std::pair<Tree, Rational>> by_tree() const;
};

struct DecomposeOptions {
  /// Re-validate the chain-point conditions of every intermediate point.
  bool check_peeling_invariant = false;
  /// Receives every peel record, including zero-mass rounds.
  std::vector<PeelRecord>* trace = nullptr;
};

/// Layered convex combination of a chain-point: repeated peel_step from
/// x with the family {V}, until the remaining point is a single tree. A peel
/// of fraction epsilon from remaining mass m contributes coefficient
/// epsilon*m. The result is checked with verify_layered before returning.
///
/// Throws PreconditionViolation if x is not a chain-point for `chain`.
LayeredDecomposition layered_decompose(const Graph& graph, const EdgeVector& x, const Chain& chain,
                                       const DecomposeOptions& options = {});

struct VerifyFailure {
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyFailure> failures;
  /// Mass of trees whose smallest feasible layer is <= j, for j = 1..l.
  std::vector<Rational> gao_prefix_mass;

  bool passed() const { return failures.empty(); }
};

/// Exact check of a layered decomposition against x and its chain:
/// thresholds, coefficient sum, recombination, Gao property per assigned
/// layer, exact per-layer masses, and the prefix condition
/// sum{coef : m(T) <= j} >= l_1 + ... + l_j.
VerifyReport verify_layered(const Graph& graph, const EdgeVector& x, const Chain& chain,
                            const LayeredDecomposition& decomposition);

class SuitabilityUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// eps_X = (r(X) - x(X)) / (r(X) - p(X)) with p the Gao rank on all edges of
/// the graph. Throws SuitabilityUndefined when p(X) = r(X) and
/// InconsistencyError when x(X) = r(X) > p(X), which a chain-point excludes.
Rational suitability_epsilon(const Graph& graph, const EdgeVector& x, const Chain& chain,
                             const EdgeSet& edges);

}  // namespace layered
