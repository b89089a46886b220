#include "layered/flow.hpp"

#include <algorithm>
#include <queue>

#include "layered/errors.hpp"

namespace layered {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count < 2) throw InputError("flow network needs at least two nodes");
  if (source < 0 || source >= node_count || sink < 0 || sink >= node_count || source == sink) {
    throw InputError("invalid source/sink");
  }
}

void FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_ || from == to) {
    throw InputError("invalid arc endpoints");
  }
  if (to == source_) throw InputError("arc into the source");
  if (from == sink_) throw InputError("arc out of the sink");
  if (!capacity.infinite && capacity.value.sign() < 0) throw InputError("negative capacity");
  arcs_.push_back({from, to, std::move(capacity)});
}

namespace {

struct ResidualArc {
  int to;
  int reverse;  // index of the paired arc in adjacency[to]
  Rational residual;
};

}  // namespace

CutResult max_flow_min_cut(const FlowNetwork& network) {
  const int n = network.node_count();

  // Infinite capacity is represented by a value strictly larger than any
  // finite cut.
  Rational sentinel(1);
  for (const auto& arc : network.arcs()) {
    if (!arc.capacity.infinite) sentinel += arc.capacity.value;
  }

  std::vector<std::vector<ResidualArc>> adj(n);
  std::vector<std::pair<int, int>> forward_index;  // (node, slot) per original arc
  for (const auto& arc : network.arcs()) {
    const Rational cap = arc.capacity.infinite ? sentinel : arc.capacity.value;
    const int fwd_slot = static_cast<int>(adj[arc.from].size());
    const int rev_slot = static_cast<int>(adj[arc.to].size());
    adj[arc.from].push_back({arc.to, rev_slot, cap});
    adj[arc.to].push_back({arc.from, fwd_slot, Rational(0)});
    forward_index.emplace_back(arc.from, fwd_slot);
  }

  const int s = network.source();
  const int t = network.sink();
  Rational flow;
  std::vector<std::pair<int, int>> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
    parent[s] = {s, -1};
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty() && parent[t].first < 0) {
      const int u = queue.front();
      queue.pop();
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const auto& a = adj[u][i];
        if (a.residual.sign() > 0 && parent[a.to].first < 0) {
          parent[a.to] = {u, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[t].first < 0) break;

    Rational bottleneck = sentinel;
    for (int v = t; v != s;) {
      const auto [u, i] = parent[v];
      if (adj[u][i].residual < bottleneck) bottleneck = adj[u][i].residual;
      v = u;
    }
    for (int v = t; v != s;) {
      const auto [u, i] = parent[v];
      auto& a = adj[u][i];
      a.residual -= bottleneck;
      adj[a.to][a.reverse].residual += bottleneck;
      v = u;
    }
    flow += bottleneck;
    if (flow >= sentinel) throw UnboundedFlowError("no finite source-sink cut");
  }

  std::vector<char> reach(n, 0);
  std::vector<int> stack{s};
  reach[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& a : adj[u]) {
      if (a.residual.sign() > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }

  // Strong duality and conservation, checked exactly.
  Rational cut_capacity;
  std::vector<Rational> balance(n);
  for (std::size_t k = 0; k < network.arcs().size(); ++k) {
    const auto& arc = network.arcs()[k];
    const auto [node, slot] = forward_index[k];
    const Rational cap = arc.capacity.infinite ? sentinel : arc.capacity.value;
    const Rational used = cap - adj[node][slot].residual;
    if (used.sign() < 0 || used > cap) throw InternalError("flow violates capacity");
    balance[arc.from] -= used;
    balance[arc.to] += used;
    if (reach[arc.from] && !reach[arc.to]) cut_capacity += cap;
  }
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t && !balance[v].is_zero()) throw InternalError("flow not conserved");
  }
  if (cut_capacity != flow || balance[t] != flow) throw InternalError("max-flow/min-cut mismatch");
  if (cut_capacity >= sentinel) throw UnboundedFlowError("no finite source-sink cut");

  CutResult result;
  result.value = flow;
  for (int v = 0; v < n; ++v) {
    if (reach[v]) result.source_side.push_back(v);
  }
  return result;
}

namespace {

ExcessResult excess_with(const Graph& graph, const EdgeVector& y, const Rational& kappa,
                         std::optional<Vertex> forced) {
  const int n = graph.vertex_count();
  const EdgeSet support = y.support();
  // 0 = source, 1 = sink, 2..n+1 vertices, then one node per support edge.
  FlowNetwork net(2 + n + static_cast<int>(support.size()), 0, 1);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const int node = 2 + n + static_cast<int>(i);
    const Edge& ed = graph.edge(support[i]);
    net.add_arc(0, node, Capacity{y.get(support[i])});
    net.add_arc(node, 2 + ed.u, Capacity::unbounded());
    net.add_arc(node, 2 + ed.v, Capacity::unbounded());
  }
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 + v, 1, Capacity{kappa});
  if (forced) net.add_arc(0, 2 + *forced, Capacity::unbounded());

  const CutResult cut_result = max_flow_min_cut(net);
  ExcessResult out;
  out.value = y.total() - cut_result.value;
  for (int node : cut_result.source_side) {
    if (node >= 2 && node < 2 + n) out.argmax.push_back(node - 2);
  }
  return out;
}

}  // namespace

ExcessResult max_modular_excess(const Graph& graph, const EdgeVector& y, const Rational& kappa,
                                std::optional<Vertex> forced) {
  if (kappa.sign() < 0) throw InputError("kappa must be nonnegative");
  for (const auto& [e, _] : y.entries()) graph.check_edge(e);
  if (forced) {
    graph.check_vertex(*forced);
    return excess_with(graph, y, kappa, forced);
  }
  ExcessResult free = excess_with(graph, y, kappa, std::nullopt);
  if (!free.argmax.empty()) return free;
  std::optional<ExcessResult> best;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    ExcessResult r = excess_with(graph, y, kappa, v);
    if (!best || r.value > best->value) best = std::move(r);
  }
  return *best;
}

}  // namespace layered
