#include "layered/chain.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "layered/errors.hpp"
#include "layered/flow.hpp"
#include "layered/polytope.hpp"

namespace layered {

std::string format_vertex_set(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Chain::Chain(int vertex_count, std::vector<VertexSet> sets) : vertex_count_(vertex_count) {
  if (sets.empty()) throw InputError("chain must contain at least one set");
  for (auto& s : sets) {
    const std::size_t before = s.size();
    s = make_vertex_set(std::move(s));
    if (s.size() != before) throw InputError("chain set with repeated vertex");
    if (s.empty()) throw InputError("chain set is empty");
    if (s.front() < 0 || s.back() >= vertex_count) throw InputError("chain vertex out of range");
    if (static_cast<int>(s.size()) == vertex_count) throw InputError("chain set equals V");
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (!is_subset(sets[i - 1], sets[i]) || sets[i - 1].size() == sets[i].size()) {
      throw InputError("chain is not strictly increasing at position " + std::to_string(i));
    }
  }
  sets_ = std::move(sets);
}

Levels levels_of(const Chain& chain, const Graph& graph) {
  if (chain.vertex_count() != graph.vertex_count()) {
    throw InputError("chain and graph disagree on the vertex count");
  }
  Levels levels;
  VertexSet previous;
  for (const VertexSet& s : chain.sets()) {
    levels.push_back(set_difference(s, previous));
    previous = s;
  }
  levels.push_back(set_difference(graph.all_vertices(), previous));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].empty()) throw InputError("level " + std::to_string(i) + " is empty");
  }
  return levels;
}

std::vector<int> level_index(const Chain& chain, const Graph& graph) {
  const Levels levels = levels_of(chain, graph);
  std::vector<int> index(graph.vertex_count(), -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (Vertex v : levels[i]) index[v] = static_cast<int>(i);
  }
  return index;
}

int crossing_count(const std::vector<int>& levels, const Edge& edge) {
  return std::abs(levels[edge.u] - levels[edge.v]);
}

EdgeSet gao_edges(const Chain& chain, const Graph& graph, int q) {
  if (q < 0 || q >= chain.size()) throw InputError("cut index out of range");
  const auto level = level_index(chain, graph);
  EdgeSet out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edges()[e];
    const int lo = std::min(level[ed.u], level[ed.v]);
    const int hi = std::max(level[ed.u], level[ed.v]);
    if (lo == q && hi == q + 1) out.push_back(e);
  }
  return out;
}

bool is_gao_tree(const Graph& graph, const Tree& tree, const Chain& chain) {
  if (!is_spanning_tree(graph, tree.edges())) return false;
  const auto level = level_index(chain, graph);
  std::vector<int> hits(chain.size(), 0);
  for (EdgeId e : tree.edges()) {
    const Edge& ed = graph.edge(e);
    const int lo = std::min(level[ed.u], level[ed.v]);
    const int hi = std::max(level[ed.u], level[ed.v]);
    for (int c = lo; c < hi; ++c) ++hits[c];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<Rational> cut_sizes(const Graph& graph, const EdgeVector& x, const Chain& chain) {
  std::vector<Rational> sizes;
  sizes.reserve(chain.size());
  for (const VertexSet& s : chain.sets()) sizes.push_back(sum_over(graph, x, cut(graph, s)));
  return sizes;
}

ChainPointReport validate_chain_point(const Graph& graph, const EdgeVector& x, const Chain& chain) {
  ChainPointReport report;
  const Levels levels = levels_of(chain, graph);
  const int k = chain.size() - 1;

  const SpMembership sp = sp_membership(graph, x);
  if (!sp.member) report.violations.push_back({"(i)", "x not in Sp(G): " + sp.reason});

  report.sizes = cut_sizes(graph, x, chain);
  const Rational one(1);
  const Rational two(2);
  for (int i : {0, k}) {
    if (report.sizes[i] != one) {
      report.violations.push_back({"(ii)", "x(delta(V_" + std::to_string(i) + ")) = " +
                                               report.sizes[i].to_string() + " != 1"});
    }
    if (k == 0) break;
  }
  for (int i = 1; i < k; ++i) {
    if (report.sizes[i] >= two) {
      report.violations.push_back({"(ii)", "x(delta(V_" + std::to_string(i) + ")) = " +
                                               report.sizes[i].to_string() + " >= 2"});
    }
  }

  for (int i = 1; i <= k; ++i) {
    Rational degree_sum;
    for (Vertex v : levels[i]) {
      for (EdgeId e : graph.incident(v)) degree_sum += x.get(e);
    }
    const Rational target(2 * static_cast<long>(levels[i].size()));
    if (degree_sum != target) {
      report.violations.push_back({"(iii)", "level L_" + std::to_string(i) + " = " +
                                                format_vertex_set(levels[i]) + " has degree sum " +
                                                degree_sum.to_string() + " != " +
                                                target.to_string()});
    }
  }
  return report;
}

namespace {

Rational separating_cut(const Graph& graph, const EdgeVector& x, const VertexSet& sources,
                        const VertexSet& sinks) {
  const int n = graph.vertex_count();
  FlowNetwork net(n + 2, n, n + 1);
  for (const auto& [e, v] : x.entries()) {
    const Edge& ed = graph.edge(e);
    net.add_arc(ed.u, ed.v, Capacity{v});
    net.add_arc(ed.v, ed.u, Capacity{v});
  }
  for (Vertex v : sources) net.add_arc(n, v, Capacity::unbounded());
  for (Vertex v : sinks) net.add_arc(v, n + 1, Capacity::unbounded());
  return max_flow_min_cut(net).value;
}

}  // namespace

Chain derive_chain(const Graph& graph, const EdgeVector& x, Vertex s, Vertex t) {
  graph.check_vertex(s);
  graph.check_vertex(t);
  if (s == t) throw InputError("s and t must differ");
  const int n = graph.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    Rational degree;
    for (EdgeId e : graph.incident(v)) degree += x.get(e);
    const Rational want(v == s || v == t ? 1 : 2);
    if (degree != want) {
      throw InputError("degree constraint violated at vertex " + std::to_string(v) + ": " +
                       degree.to_string() + " != " + want.to_string());
    }
  }
  const SpMembership sp = sp_membership(graph, x);
  if (!sp.member) throw InputError("x is not in Sp(G): " + sp.reason);

  // precedes[u][v]: some narrow set contains u but not v.
  const Rational two(2);
  std::vector<std::vector<char>> precedes(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    if (u == t) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (v == s || v == u) continue;
      const VertexSet src = make_vertex_set({s, u});
      const VertexSet snk = make_vertex_set({v, t});
      precedes[u][v] = separating_cut(graph, x, src, snk) < two;
    }
  }

  std::vector<int> rank(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) rank[v] += precedes[u][v];
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && static_cast<bool>(precedes[u][v]) != (rank[u] < rank[v])) {
        throw InconsistencyError("narrow cuts do not form a chain (vertices " + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
      }
    }
  }

  std::map<int, VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) groups[rank[v]].push_back(v);
  std::vector<VertexSet> sets;
  VertexSet prefix;
  for (const auto& [_, group] : groups) {
    prefix = set_union(prefix, group);
    if (static_cast<int>(prefix.size()) == n) break;
    sets.push_back(prefix);
  }
  Chain chain(n, std::move(sets));
  for (const Rational& size : cut_sizes(graph, x, chain)) {
    if (size >= two) throw InconsistencyError("derived chain contains a cut of size >= 2");
  }
  if (chain[0] != VertexSet{s} ||
      chain[chain.size() - 1] != set_difference(graph.all_vertices(), {t})) {
    throw InconsistencyError("derived chain does not start at {s} and end at V - {t}");
  }
  return chain;
}

Rational LayerThresholds::prefix_mass(int j) const {
  Rational sum;
  for (int i = 0; i < j; ++i) sum += lambdas.at(i);
  return sum;
}

LayerThresholds layer_thresholds(const Graph& graph, const EdgeVector& x, const Chain& chain) {
  std::vector<Rational> sizes = cut_sizes(graph, x, chain);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.back() != Rational(1)) {
    throw PreconditionViolation("smallest narrow cut size is " + sizes.back().to_string() +
                                ", not 1");
  }
  if (sizes.front() >= Rational(2)) {
    throw PreconditionViolation("chain contains a cut of size >= 2");
  }
  LayerThresholds out;
  Rational previous(2);
  for (const Rational& size : sizes) {
    out.lambdas.push_back(previous - size);
    previous = size;
  }
  out.sizes = std::move(sizes);
  return out;
}

Chain subchain_at(const Graph& graph, const EdgeVector& x, const Chain& chain,
                  const Rational& threshold) {
  const auto sizes = cut_sizes(graph, x, chain);
  std::vector<VertexSet> kept;
  for (int i = 0; i < chain.size(); ++i) {
    if (sizes[i] <= threshold) kept.push_back(chain[i]);
  }
  if (kept.empty()) throw PreconditionViolation("no chain cut of size <= " + threshold.to_string());
  return Chain(chain.vertex_count(), std::move(kept));
}

Chain narrow_subchain(const Graph& graph, const EdgeVector& x, const Chain& chain) {
  const auto sizes = cut_sizes(graph, x, chain);
  std::vector<VertexSet> kept;
  for (int i = 0; i < chain.size(); ++i) {
    if (sizes[i] < Rational(2)) kept.push_back(chain[i]);
  }
  if (kept.empty()) throw PreconditionViolation("no narrow cut left in the chain");
  return Chain(chain.vertex_count(), std::move(kept));
}

}  // namespace layered
