#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "layered/graph.hpp"
#include "layered/rational.hpp"

namespace layered {

/// Arc capacity; `infinite` arcs are never cut in a finite minimum cut.
struct Capacity {
  Rational value;
  bool infinite = false;

  static Capacity unbounded() { return Capacity{Rational(0), true}; }
};

/// Directed network with a designated source and sink.
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Capacity capacity;
  };

  FlowNetwork(int node_count, int source, int sink);

  /// Throws InputError for negative capacities, arcs into the source or out
  /// of the sink, and unknown nodes.
  void add_arc(int from, int to, Capacity capacity);

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

class UnboundedFlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CutResult {
  Rational value;
  /// Nodes reachable from the source in the final residual network: the
  /// inclusion-minimal minimum cut. Sorted.
  std::vector<int> source_side;
};

/// Exact maximum flow / minimum cut (shortest augmenting paths). Throws
/// UnboundedFlowError when every source-sink cut contains an infinite arc.
CutResult max_flow_min_cut(const FlowNetwork& network);

struct ExcessResult {
  Rational value;
  VertexSet argmax;
};

/// max over nonempty U (containing `forced` when given) of y(E(U)) - kappa*|U|,
/// together with the inclusion-minimal maximizer.
///
/// Edge-node construction: source -> edge (y_e), edge -> both ends (infinite),
/// vertex -> sink (kappa), and an infinite source -> forced arc. The answer is
/// y(E) minus the minimum cut. When no vertex is forced and the minimal
/// maximizer is empty, every vertex is tried as the forced one and the best
/// (smallest vertex on ties) is returned.
ExcessResult max_modular_excess(const Graph& graph, const EdgeVector& y, const Rational& kappa,
                                std::optional<Vertex> forced = std::nullopt);

}  // namespace layered
