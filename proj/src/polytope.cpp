#include "layered/polytope.hpp"

#include <sstream>

#include "layered/errors.hpp"
#include "layered/flow.hpp"

namespace layered {

namespace {

std::string format_set(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace

SpMembership sp_membership(const Graph& graph, const EdgeVector& y) {
  SpMembership out;
  for (const auto& [e, _] : y.entries()) graph.check_edge(e);
  const Rational total = y.total();
  const Rational target(graph.vertex_count() - 1);
  if (total != target) {
    out.reason = "y(E) = " + total.to_string() + " != |V|-1 = " + target.to_string();
    return out;
  }
  // max over nonempty U of y(E(U)) - |U| must be at most -1.
  const ExcessResult excess = max_modular_excess(graph, y, Rational(1));
  if (excess.value > Rational(-1)) {
    out.witness = excess.argmax;
    const auto size = static_cast<long>(excess.argmax.size());
    out.reason = "y(E(U)) = " + (excess.value + Rational(size)).to_string() + " > |U|-1 = " +
                 std::to_string(size - 1) + " for U = " + format_set(excess.argmax);
    return out;
  }
  out.member = true;
  return out;
}

bool cone_membership(const Graph& graph, const EdgeVector& y) {
  if (y.entries().empty()) return true;
  const Rational scale = Rational(graph.vertex_count() - 1) / y.total();
  EdgeVector normalized;
  for (const auto& [e, v] : y.entries()) normalized.set(e, v * scale);
  return sp_membership(graph, normalized).member;
}

bool is_tight(const Graph& graph, const EdgeVector& x, const VertexSet& u) {
  if (u.empty()) return false;
  return sum_over(graph, x, induced_edges(graph, u)) == Rational(static_cast<long>(u.size()) - 1);
}

std::string describe(const Graph& graph, const Bottleneck& bottleneck) {
  struct Visitor {
    const Graph& graph;
    std::string operator()(const Terminal&) const { return "terminal"; }
    std::string operator()(const ZeroedEdges& z) const {
      std::string s = "zeroed";
      for (EdgeId e : z.edges) s += " " + graph.edge_label(e);
      return s;
    }
    std::string operator()(const TightSet& t) const { return "tight " + format_set(t.vertices); }
    std::string operator()(const LayerBoundary& b) const {
      std::string s = "layer-boundary";
      for (int c : b.cuts) s += " " + std::to_string(c);
      return s;
    }
  };
  return std::visit(Visitor{graph}, bottleneck);
}

LambdaResult lambda_max(const Graph& graph, const EdgeVector& x, const Tree& tree) {
  if (!tree.edges().empty() && tree.edges().back() >= graph.edge_count()) {
    throw InputError("tree does not belong to the graph");
  }
  Rational cap(1);
  for (EdgeId e : tree.edges()) {
    const Rational v = x.get(e);
    if (v.is_zero()) throw InputError("tree edge " + graph.edge_label(e) + " outside support(x)");
    if (v < cap) cap = v;
  }
  if (x == EdgeVector::indicator(tree.edges())) return {Rational(1), Terminal{}, 0};
  if (cap >= Rational(1)) {
    throw PreconditionViolation("x has tree edges of value >= 1 but is not the tree: not in Sp(G)");
  }

  Rational lambda = cap;
  std::optional<VertexSet> binding;
  int steps = 0;
  for (;;) {
    EdgeVector y;
    for (const auto& [e, v] : x.entries()) {
      y.set(e, tree.contains(e) ? v - lambda : v);
    }
    const Rational kappa = Rational(1) - lambda;
    const ExcessResult worst = max_modular_excess(graph, y, kappa);
    // g(lambda) = max_U y(E(U)) - kappa*(|U|-1)
    if (worst.value + kappa <= Rational(0)) break;

    const VertexSet& u = worst.argmax;
    const EdgeSet inside = induced_edges(graph, u);
    long tree_inside = 0;
    for (EdgeId e : inside) tree_inside += tree.contains(e) ? 1 : 0;
    const Rational rank(static_cast<long>(u.size()) - 1);
    const Rational slope = rank - Rational(tree_inside);
    if (slope.sign() <= 0) {
      throw PreconditionViolation("violated set is spanned by the tree: x is not in Sp(G)");
    }
    const Rational next = (rank - sum_over(graph, x, inside)) / slope;
    if (next >= lambda || next.sign() < 0) {
      throw PreconditionViolation("Newton step did not decrease lambda: x is not in Sp(G)");
    }
    lambda = next;
    binding = u;
    ++steps;
  }

  if (binding) return {lambda, TightSet{*binding}, steps};
  ZeroedEdges zeroed;
  for (EdgeId e : tree.edges()) {
    if (x.get(e) == lambda) zeroed.edges.push_back(e);
  }
  return {lambda, zeroed, steps};
}

}  // namespace layered
