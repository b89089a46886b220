#pragma once

#include <span>
#include <vector>

#include "layered/graph.hpp"

namespace layered {

/// Laminar family of vertex sets that always contains V. Singletons and the
/// empty set are never stored. Members are kept sorted by (size, contents),
/// so iterating them visits every set before any of its supersets.
class LaminarFamily {
 public:
  explicit LaminarFamily(int vertex_count);
  /// Throws InputError if two members cross.
  LaminarFamily(int vertex_count, std::vector<VertexSet> members);

  int vertex_count() const { return vertex_count_; }
  std::span<const VertexSet> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(const VertexSet& s) const;

  /// First member crossing s, if any.
  const VertexSet* find_crossing(const VertexSet& s) const;

  friend bool operator==(const LaminarFamily&, const LaminarFamily&) = default;

 private:
  friend LaminarFamily uncross_insert(const Graph&, const LaminarFamily&, const VertexSet&,
                                      const EdgeVector&);
  void insert_sorted(VertexSet s);

  int vertex_count_;
  std::vector<VertexSet> members_;
};

/// Two sets cross when they intersect and neither contains the other.
bool crosses(const VertexSet& a, const VertexSet& b);

/// Inserts the tight set U into a laminar family of tight sets. A set that
/// crosses a member W is replaced by U cap W and U cup W (both tight by
/// supermodularity of x(E(.))), recursively, until nothing crosses. On
/// support(x) the incidence vector of E(U) stays in the span of the members.
/// Throws PreconditionViolation if U or any produced set is not tight.
LaminarFamily uncross_insert(const Graph& graph, const LaminarFamily& family, const VertexSet& u,
                             const EdgeVector& x);

}  // namespace layered
