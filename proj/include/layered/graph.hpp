#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layered/rational.hpp"

namespace layered {

using Vertex = int;
using EdgeId = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free list of edge identifiers.
using EdgeSet = std::vector<EdgeId>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
EdgeSet make_edge_set(std::vector<EdgeId> edges);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& set, Vertex v);

/// An undirected edge with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edge identifiers are the
/// positions in the input sequence and never change.
class Graph {
 public:
  /// Throws InputError on self-loops, parallel edges or out-of-range ends.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const;
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  VertexSet all_vertices() const;
  EdgeSet all_edges() const;

  void check_edge(EdgeId e) const;
  void check_vertex(Vertex v) const;
  void check_vertex_set(const VertexSet& s) const;

  /// Per-vertex membership flags for a vertex set.
  std::vector<char> membership(const VertexSet& s) const;

  /// "u-v" label used in text formats and diagnostics.
  std::string edge_label(EdgeId e) const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::map<std::pair<Vertex, Vertex>, EdgeId> lookup_;
};

/// Sparse nonnegative rational vector indexed by edges. Zero entries are
/// never stored, so the key set is exactly the support.
class EdgeVector {
 public:
  EdgeVector() = default;

  static EdgeVector indicator(const EdgeSet& edges);

  /// Throws InputError for negative values; zero erases the entry.
  void set(EdgeId e, const Rational& value);
  Rational get(EdgeId e) const;

  const std::map<EdgeId, Rational>& entries() const { return entries_; }
  EdgeSet support() const;
  Rational total() const;

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  std::map<EdgeId, Rational> entries_;
};

/// A spanning tree of a particular graph, validated on construction.
class Tree {
 public:
  /// Throws InputError unless `edges` is a spanning tree of `graph`.
  Tree(const Graph& graph, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  bool contains(EdgeId e) const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree& a, const Tree& b) { return a.edges_ <=> b.edges_; }

 private:
  EdgeSet edges_;
};

/// x(F): exact sum of x over F. Throws InputError for unknown edge ids.
Rational sum_over(const Graph& graph, const EdgeVector& x, const EdgeSet& edges);

/// delta(S): edges with exactly one endpoint in S. Requires 0 < |S| < n.
EdgeSet cut(const Graph& graph, const VertexSet& s);

/// delta(S1, S2): edges with one endpoint in S1 and the other in S2.
EdgeSet cut_between(const Graph& graph, const VertexSet& s1, const VertexSet& s2);

/// E(U): edges with both endpoints in U.
EdgeSet induced_edges(const Graph& graph, const VertexSet& u);

/// Connected components of (vertices, X), each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& graph, const VertexSet& vertices,
                                  const EdgeSet& x);

bool is_spanning_tree(const Graph& graph, const EdgeSet& t);

/// Vertices covered by the edges in X.
VertexSet covered_vertices(const Graph& graph, const EdgeSet& x);

}  // namespace layered
