#include "layered/laminar.hpp"

#include <algorithm>
#include <deque>

#include "layered/chain.hpp"
#include "layered/errors.hpp"
#include "layered/polytope.hpp"

namespace layered {

namespace {

bool member_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

bool crosses(const VertexSet& a, const VertexSet& b) {
  const VertexSet common = set_intersection(a, b);
  return !common.empty() && common.size() != a.size() && common.size() != b.size();
}

LaminarFamily::LaminarFamily(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw InputError("laminar family needs a nonempty ground set");
  if (vertex_count > 1) {
    VertexSet all(vertex_count);
    for (int v = 0; v < vertex_count; ++v) all[v] = v;
    members_.push_back(std::move(all));
  }
}

LaminarFamily::LaminarFamily(int vertex_count, std::vector<VertexSet> members)
    : LaminarFamily(vertex_count) {
  for (auto& m : members) {
    m = make_vertex_set(std::move(m));
    if (!m.empty() && (m.front() < 0 || m.back() >= vertex_count)) {
      throw InputError("laminar member out of range");
    }
    if (m.size() <= 1 || contains(m)) continue;
    if (find_crossing(m)) throw InputError("family is not laminar: " + format_vertex_set(m));
    insert_sorted(std::move(m));
  }
}

bool LaminarFamily::contains(const VertexSet& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

const VertexSet* LaminarFamily::find_crossing(const VertexSet& s) const {
  for (const VertexSet& m : members_) {
    if (crosses(m, s)) return &m;
  }
  return nullptr;
}

void LaminarFamily::insert_sorted(VertexSet s) {
  auto pos = std::lower_bound(members_.begin(), members_.end(), s, member_order);
  members_.insert(pos, std::move(s));
}

LaminarFamily uncross_insert(const Graph& graph, const LaminarFamily& family, const VertexSet& u,
                             const EdgeVector& x) {
  if (!is_tight(graph, x, u)) {
    throw PreconditionViolation("set " + format_vertex_set(u) + " is not tight");
  }
  LaminarFamily out = family;
  std::deque<VertexSet> pending{make_vertex_set(u)};
  // Every union step strictly increases sum |member|^2, so this is a
  // generous bound rather than a tuning knob.
  const long limit = 64L * graph.vertex_count() * graph.vertex_count() + 64;
  long steps = 0;
  while (!pending.empty()) {
    if (++steps > limit) throw InternalError("uncrossing did not terminate");
    VertexSet s = std::move(pending.front());
    pending.pop_front();
    if (s.size() <= 1 || out.contains(s)) continue;
    if (!is_tight(graph, x, s)) {
      throw PreconditionViolation("uncrossing produced non-tight set " + format_vertex_set(s));
    }
    if (const VertexSet* w = out.find_crossing(s)) {
      pending.push_back(set_intersection(s, *w));
      pending.push_back(set_union(s, *w));
      continue;
    }
    out.insert_sorted(std::move(s));
  }
  return out;
}

}  // namespace layered
