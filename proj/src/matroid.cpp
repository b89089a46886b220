#include "layered/matroid.hpp"

#include <algorithm>

#include "layered/errors.hpp"
#include "layered/union_find.hpp"

namespace layered {

int rank_graphic(const Graph& graph, const EdgeSet& x) {
  detail::UnionFind uf(graph.vertex_count());
  int rank = 0;
  for (EdgeId e : x) {
    const Edge& ed = graph.edge(e);
    if (uf.unite(ed.u, ed.v)) ++rank;
  }
  return rank;
}

GaoMatroid::GaoMatroid(Graph graph, Chain chain, EdgeSet ground)
    : graph_(std::move(graph)),
      chain_(std::move(chain)),
      ground_(make_edge_set(std::move(ground))),
      level_(level_index(chain_, graph_)),
      in_ground_(graph_.edge_count(), 0) {
  for (EdgeId e : ground_) {
    graph_.check_edge(e);
    in_ground_[e] = 1;
  }
}

GaoMatroid::Kind GaoMatroid::kind(EdgeId e) const {
  const int crossings = crossing_count(level_, graph_.edge(e));
  if (crossings == 0) return Kind::IntraLevel;
  return crossings == 1 ? Kind::GaoEdge : Kind::Loop;
}

int GaoMatroid::block(EdgeId e) const {
  const Edge& ed = graph_.edge(e);
  switch (kind(e)) {
    case Kind::IntraLevel:
      return level_[ed.u];
    case Kind::GaoEdge:
      return std::min(level_[ed.u], level_[ed.v]);
    case Kind::Loop:
      break;
  }
  return -1;
}

void GaoMatroid::check_ground(const EdgeSet& x) const {
  for (EdgeId e : x) {
    graph_.check_edge(e);
    if (!in_ground_[e]) throw InputError("edge " + graph_.edge_label(e) + " not in the ground set");
  }
}

int GaoMatroid::rank(const EdgeSet& x) const {
  check_ground(x);
  detail::UnionFind uf(graph_.vertex_count());
  std::vector<char> cut_used(chain_.size(), 0);
  int rank = 0;
  for (EdgeId e : x) {
    const Edge& ed = graph_.edge(e);
    switch (kind(e)) {
      case Kind::IntraLevel:
        rank += uf.unite(ed.u, ed.v) ? 1 : 0;
        break;
      case Kind::GaoEdge:
        if (!cut_used[block(e)]) {
          cut_used[block(e)] = 1;
          ++rank;
        }
        break;
      case Kind::Loop:
        break;
    }
  }
  return rank;
}

bool GaoMatroid::is_independent(const EdgeSet& x) const {
  return rank(x) == static_cast<int>(make_edge_set(x).size());
}

Tree max_weight_gao_base(const GaoMatroid& matroid, const std::map<EdgeId, Rational>& weights) {
  std::vector<std::pair<Rational, EdgeId>> order;
  for (EdgeId e : matroid.ground()) {
    auto it = weights.find(e);
    order.emplace_back(it == weights.end() ? Rational(0) : it->second, e);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  const Graph& graph = matroid.graph();
  detail::UnionFind uf(graph.vertex_count());
  std::vector<char> cut_used(matroid.chain().size(), 0);
  EdgeSet chosen;
  for (const auto& [_, e] : order) {
    const Edge& ed = graph.edge(e);
    switch (matroid.kind(e)) {
      case GaoMatroid::Kind::IntraLevel:
        if (uf.unite(ed.u, ed.v)) chosen.push_back(e);
        break;
      case GaoMatroid::Kind::GaoEdge:
        if (!cut_used[matroid.block(e)]) {
          cut_used[matroid.block(e)] = 1;
          chosen.push_back(e);
        }
        break;
      case GaoMatroid::Kind::Loop:
        break;
    }
  }
  if (static_cast<int>(chosen.size()) != graph.vertex_count() - 1) {
    throw NoGaoTreeError("ground set has rank " + std::to_string(chosen.size()) + " < |V|-1 = " +
                         std::to_string(graph.vertex_count() - 1));
  }
  return Tree(graph, std::move(chosen));
}

Tree gao_tree_spanning_laminar(const Graph& graph, const EdgeVector& x, const Chain& chain,
                               const LaminarFamily& family) {
  if (family.vertex_count() != graph.vertex_count()) {
    throw InputError("family and graph disagree on the vertex count");
  }
  const int n = graph.vertex_count();
  const std::vector<int> level = level_index(chain, graph);
  const EdgeSet support = x.support();
  for (EdgeId e : support) graph.check_edge(e);

  detail::UnionFind uf(n);
  std::vector<char> chosen(graph.edge_count(), 0);
  // Member (by position) whose subtree supplied the Gao-edge of each cut.
  std::vector<int> cut_owner(chain.size(), -1);
  const auto members = family.members();

  for (int idx = 0; idx < static_cast<int>(members.size()); ++idx) {
    const VertexSet& u = members[idx];
    const std::vector<char> in_u = graph.membership(u);

    std::vector<char> meets(chain.size() + 1, 0);
    for (Vertex v : u) meets[level[v]] = 1;
    const int lo = static_cast<int>(std::find(meets.begin(), meets.end(), 1) - meets.begin());
    const int hi = static_cast<int>(meets.rend() - std::find(meets.rbegin(), meets.rend(), 1)) - 1;
    for (int i = lo; i <= hi; ++i) {
      if (!meets[i]) {
        throw PreconditionViolation("levels meeting " + format_vertex_set(u) +
                                    " are not an interval (missing L_" + std::to_string(i) + ")");
      }
    }

    for (EdgeId e : support) {
      const Edge& ed = graph.edges()[e];
      if (in_u[ed.u] && in_u[ed.v] && level[ed.u] == level[ed.v] && uf.unite(ed.u, ed.v)) {
        chosen[e] = 1;
      }
    }
    for (int i = lo; i <= hi; ++i) {
      int root = -1;
      for (Vertex v : u) {
        if (level[v] != i) continue;
        if (root < 0) root = uf.find(v);
        if (uf.find(v) != root) {
          throw PreconditionViolation("L_" + std::to_string(i) + " cap " + format_vertex_set(u) +
                                      " is disconnected in support(x)");
        }
      }
    }

    for (int q = lo; q < hi; ++q) {
      if (cut_owner[q] >= 0) {
        if (!is_subset(members[cut_owner[q]], u)) {
          throw PreconditionViolation("disjoint members " +
                                      format_vertex_set(members[cut_owner[q]]) + " and " +
                                      format_vertex_set(u) + " both need cut " +
                                      std::to_string(q));
        }
        continue;
      }
      EdgeId pick = -1;
      for (EdgeId e : support) {
        const Edge& ed = graph.edges()[e];
        if (in_u[ed.u] && in_u[ed.v] && std::min(level[ed.u], level[ed.v]) == q &&
            std::max(level[ed.u], level[ed.v]) == q + 1) {
          pick = e;
          break;
        }
      }
      if (pick < 0) {
        throw PreconditionViolation("no Gao-edge of cut " + std::to_string(q) + " inside " +
                                    format_vertex_set(u));
      }
      chosen[pick] = 1;
      cut_owner[q] = idx;
    }
  }

  EdgeSet edges;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (chosen[e]) edges.push_back(e);
  }
  if (!is_spanning_tree(graph, edges)) throw InternalError("laminar builder produced a non-tree");
  Tree tree(graph, std::move(edges));
  if (!is_gao_tree(graph, tree, chain) || !spans_family(graph, tree, family)) {
    throw InternalError("laminar builder produced a tree violating its contract");
  }
  return tree;
}

bool spans_family(const Graph& graph, const Tree& tree, const LaminarFamily& family) {
  for (const VertexSet& u : family.members()) {
    long inside = 0;
    for (EdgeId e : induced_edges(graph, u)) inside += tree.contains(e) ? 1 : 0;
    if (inside != static_cast<long>(u.size()) - 1) return false;
  }
  return true;
}

std::map<EdgeId, Rational> laminar_depth_weights(const Graph& graph, const LaminarFamily& family) {
  std::map<EdgeId, Rational> weights;
  for (const VertexSet& u : family.members()) {
    for (EdgeId e : induced_edges(graph, u)) weights[e] += Rational(1);
  }
  return weights;
}

}  // namespace layered
