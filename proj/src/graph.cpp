#include "layered/graph.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "layered/errors.hpp"
#include "layered/union_find.hpp"

namespace layered {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

EdgeSet make_edge_set(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), incident_(vertex_count > 0 ? vertex_count : 0) {
  if (vertex_count < 1) throw InputError("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    if (!lookup_.emplace(std::make_pair(e.u, e.v), id).second) {
      throw InputError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    edges_.push_back(e);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

const Edge& Graph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

std::span<const EdgeId> Graph::incident(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = lookup_.find({a, b});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VertexSet Graph::all_vertices() const {
  VertexSet all(vertex_count_);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

EdgeSet Graph::all_edges() const {
  EdgeSet all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

void Graph::check_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw InputError("unknown edge id " + std::to_string(e));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count_) throw InputError("vertex out of range: " + std::to_string(v));
}

void Graph::check_vertex_set(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
}

std::vector<char> Graph::membership(const VertexSet& s) const {
  std::vector<char> in(vertex_count_, 0);
  for (Vertex v : s) {
    check_vertex(v);
    in[v] = 1;
  }
  return in;
}

std::string Graph::edge_label(EdgeId e) const {
  const Edge& ed = edge(e);
  return std::to_string(ed.u) + "-" + std::to_string(ed.v);
}

EdgeVector EdgeVector::indicator(const EdgeSet& edges) {
  EdgeVector x;
  for (EdgeId e : edges) x.set(e, Rational(1));
  return x;
}

void EdgeVector::set(EdgeId e, const Rational& value) {
  if (value.sign() < 0) {
    throw InputError("negative value " + value.to_string() + " on edge " + std::to_string(e));
  }
  if (value.is_zero()) {
    entries_.erase(e);
  } else {
    entries_[e] = value;
  }
}

Rational EdgeVector::get(EdgeId e) const {
  auto it = entries_.find(e);
  return it == entries_.end() ? Rational(0) : it->second;
}

EdgeSet EdgeVector::support() const {
  EdgeSet s;
  s.reserve(entries_.size());
  for (const auto& [e, _] : entries_) s.push_back(e);
  return s;
}

Rational EdgeVector::total() const {
  Rational sum;
  for (const auto& [_, v] : entries_) sum += v;
  return sum;
}

Tree::Tree(const Graph& graph, EdgeSet edges) : edges_(make_edge_set(std::move(edges))) {
  for (EdgeId e : edges_) graph.check_edge(e);
  if (!is_spanning_tree(graph, edges_)) throw InputError("edge set is not a spanning tree");
}

bool Tree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Rational sum_over(const Graph& graph, const EdgeVector& x, const EdgeSet& edges) {
  Rational sum;
  for (EdgeId e : edges) {
    graph.check_edge(e);
    sum += x.get(e);
  }
  return sum;
}

EdgeSet cut(const Graph& graph, const VertexSet& s) {
  const auto in = graph.membership(s);
  const auto inside = std::count(in.begin(), in.end(), 1);
  if (inside == 0 || inside == graph.vertex_count()) {
    throw InputError("cut side must be a nonempty proper subset of V");
  }
  EdgeSet out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edges()[e];
    if (in[ed.u] != in[ed.v]) out.push_back(e);
  }
  return out;
}

EdgeSet cut_between(const Graph& graph, const VertexSet& s1, const VertexSet& s2) {
  const auto in1 = graph.membership(s1);
  const auto in2 = graph.membership(s2);
  EdgeSet out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edges()[e];
    if ((in1[ed.u] && in2[ed.v]) || (in1[ed.v] && in2[ed.u])) out.push_back(e);
  }
  return out;
}

EdgeSet induced_edges(const Graph& graph, const VertexSet& u) {
  const auto in = graph.membership(u);
  EdgeSet out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edges()[e];
    if (in[ed.u] && in[ed.v]) out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& graph, const VertexSet& vertices,
                                  const EdgeSet& x) {
  const auto in = graph.membership(vertices);
  detail::UnionFind uf(graph.vertex_count());
  for (EdgeId e : x) {
    const Edge& ed = graph.edge(e);
    if (!in[ed.u] || !in[ed.v]) {
      throw InputError("edge " + graph.edge_label(e) + " leaves the vertex set");
    }
    uf.unite(ed.u, ed.v);
  }
  std::map<int, VertexSet> by_root;
  for (Vertex v : vertices) by_root[uf.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [_, comp] : by_root) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

bool is_spanning_tree(const Graph& graph, const EdgeSet& t) {
  if (static_cast<int>(t.size()) != graph.vertex_count() - 1) return false;
  detail::UnionFind uf(graph.vertex_count());
  for (EdgeId e : t) {
    const Edge& ed = graph.edge(e);
    if (!uf.unite(ed.u, ed.v)) return false;
  }
  return true;
}

VertexSet covered_vertices(const Graph& graph, const EdgeSet& x) {
  std::vector<Vertex> out;
  for (EdgeId e : x) {
    const Edge& ed = graph.edge(e);
    out.push_back(ed.u);
    out.push_back(ed.v);
  }
  return make_vertex_set(std::move(out));
}

}  // namespace layered
