#include "layered/decompose.hpp"

#include <algorithm>
#include <map>

#include "layered/errors.hpp"
#include "layered/matroid.hpp"

namespace layered {

namespace {

bool admissible(const Graph& graph, const EdgeVector& x, const Chain& current,
                const LaminarFamily& family, const Tree& tree) {
  for (EdgeId e : tree.edges()) {
    if (x.get(e).is_zero()) return false;
  }
  return is_gao_tree(graph, tree, current) && spans_family(graph, tree, family);
}

EdgeVector peel(const EdgeVector& x, const Tree& tree, const Rational& epsilon) {
  const Rational rest = Rational(1) - epsilon;
  EdgeVector next;
  for (const auto& [e, v] : x.entries()) {
    const Rational value = tree.contains(e) ? v - epsilon : v;
    if (value.sign() < 0) throw InternalError("peel produced a negative entry");
    next.set(e, value / rest);
  }
  return next;
}

}  // namespace

PeelOutcome peel_step(const Graph& graph, const EdgeVector& x, const Chain& chain,
                      const LaminarFamily& family, const std::optional<Tree>& preferred) {
  const Chain current = narrow_subchain(graph, x, chain);
  const std::vector<Rational> sizes = cut_sizes(graph, x, current);

  std::optional<Tree> chosen;
  if (preferred && admissible(graph, x, current, family, *preferred)) chosen = *preferred;
  if (!chosen) chosen = gao_tree_spanning_laminar(graph, x, current, family);
  const Tree& tree = *chosen;

  LambdaResult bound = lambda_max(graph, x, tree);
  if (std::holds_alternative<Terminal>(bound.bottleneck)) {
    return {PeelRecord{Rational(1), tree, Terminal{}, false, 0, Rational()}, x, family};
  }

  const Rational cap = Rational(2) - *std::max_element(sizes.begin(), sizes.end());
  PeelRecord record{std::min(bound.lambda, cap), tree, std::move(bound.bottleneck), false, 0,
                    Rational()};
  record.closes_layer = record.epsilon == cap;

  if (record.epsilon.is_zero()) {
    const auto* tight = std::get_if<TightSet>(&record.bottleneck);
    if (!tight) throw InternalError("zero peel without a tight set");
    LaminarFamily grown = uncross_insert(graph, family, tight->vertices, x);
    if (grown == family) throw InternalError("tight set already implied by the family");
    return {std::move(record), x, std::move(grown)};
  }

  EdgeVector next = peel(x, tree, record.epsilon);
  if (cap < bound.lambda) {
    LayerBoundary boundary;
    const auto after = cut_sizes(graph, next, chain);
    for (int i = 0; i < chain.size(); ++i) {
      if (after[i] == Rational(2)) boundary.cuts.push_back(i);
    }
    record.bottleneck = std::move(boundary);
  }
  LaminarFamily next_family = family;
  if (const auto* tight = std::get_if<TightSet>(&record.bottleneck)) {
    next_family = uncross_insert(graph, family, tight->vertices, next);
  }
  return {std::move(record), std::move(next), std::move(next_family)};
}

std::vector<LayeredTerm> LayeredDecomposition::by_tree_and_layer() const {
  std::map<std::pair<int, EdgeSet>, std::pair<Rational, const Tree*>> merged;
  for (const LayeredTerm& t : terms) {
    auto& slot = merged[{t.layer, t.tree.edges()}];
    slot.first += t.coefficient;
    slot.second = &t.tree;
  }
  std::vector<LayeredTerm> out;
  for (const auto& [key, value] : merged) out.push_back({value.first, *value.second, key.first});
  return out;
}

std::vector<std::pair<Tree, Rational>> LayeredDecomposition::by_tree() const {
  std::map<EdgeSet, std::pair<Rational, const Tree*>> merged;
  for (const LayeredTerm& t : terms) {
    auto& slot = merged[t.tree.edges()];
    slot.first += t.coefficient;
    slot.second = &t.tree;
  }
  std::vector<std::pair<Tree, Rational>> out;
  for (const auto& [_, value] : merged) out.emplace_back(*value.second, value.first);
  return out;
}

LayeredDecomposition layered_decompose(const Graph& graph, const EdgeVector& x, const Chain& chain,
                                       const DecomposeOptions& options) {
  const ChainPointReport report = validate_chain_point(graph, x, chain);
  if (!report.passed()) {
    throw PreconditionViolation("not a chain-point: " + report.violations.front().condition + " " +
                                report.violations.front().detail);
  }
  LayeredDecomposition result;
  result.thresholds = layer_thresholds(graph, x, chain);
  const int layers = result.thresholds.layer_count();
  std::vector<Chain> layer_chains;
  for (int j = 1; j <= layers; ++j) {
    layer_chains.push_back(subchain_at(graph, x, chain, result.thresholds.threshold(j)));
  }
  const std::vector<Rational> original_sizes = report.sizes;

  const int n = graph.vertex_count();
  const long guard = static_cast<long>(x.support().size()) + 4L * n + layers + 1;
  EdgeVector current = x;
  Rational mass(1);
  LaminarFamily family(n);
  std::optional<Tree> preferred;
  // A cut that reached size 2 may dip below 2 again later, so the active
  // chain only ever shrinks instead of being re-read from the point.
  Chain active = chain;

  for (long iteration = 0;; ++iteration) {
    if (iteration > guard) {
      throw InternalError("peeling exceeded " + std::to_string(guard) + " iterations");
    }
    const auto layer_it = std::find(layer_chains.begin(), layer_chains.end(), active);
    if (layer_it == layer_chains.end()) throw InternalError("active chain matches no layer");
    const int layer = static_cast<int>(layer_it - layer_chains.begin()) + 1;

    PeelOutcome step = peel_step(graph, current, active, family, preferred);
    PeelRecord& record = step.record;
    record.layer = layer;

    if (std::holds_alternative<Terminal>(record.bottleneck)) {
      record.coefficient = mass;
      result.terms.push_back({mass, record.tree, layer});
      if (options.trace) options.trace->push_back(record);
      break;
    }

    if (record.epsilon.sign() > 0) {
      record.coefficient = record.epsilon * mass;
      result.terms.push_back({record.coefficient, record.tree, layer});
      mass *= Rational(1) - record.epsilon;

      // Every tree so far crossed the still-narrow cuts exactly once.
      const Rational peeled = Rational(1) - mass;
      const auto before = cut_sizes(graph, current, active);
      const auto after = cut_sizes(graph, step.next, active);
      for (int i = 0; i < active.size(); ++i) {
        const auto original = std::find(chain.sets().begin(), chain.sets().end(), active[i]);
        const Rational& start = original_sizes[original - chain.sets().begin()];
        if (after[i] != (start - peeled) / mass) {
          throw InternalError("cut size of " + format_vertex_set(active[i]) + " drifted");
        }
      }

      const Chain shrunk = narrow_subchain(graph, step.next, active);
      if (options.check_peeling_invariant) {
        std::vector<VertexSet> expected;
        for (int i = 0; i < active.size(); ++i) {
          if (before[i] < Rational(2) - record.epsilon) expected.push_back(active[i]);
        }
        if (!(shrunk == Chain(n, std::move(expected))) ||
            !validate_chain_point(graph, step.next, shrunk).passed()) {
          throw InternalError("peeled point is not a chain-point for the shrunken chain");
        }
      }
      active = shrunk;
    }
    if (options.trace) options.trace->push_back(record);

    preferred = record.tree;
    current = std::move(step.next);
    family = std::move(step.family);
  }

  const VerifyReport check = verify_layered(graph, x, chain, result);
  if (!check.passed()) {
    throw InternalError("decomposition failed verification: " + check.failures.front().check +
                        " " + check.failures.front().detail);
  }
  return result;
}

VerifyReport verify_layered(const Graph& graph, const EdgeVector& x, const Chain& chain,
                            const LayeredDecomposition& decomposition) {
  VerifyReport report;
  auto fail = [&report](std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  };

  LayerThresholds expected;
  try {
    expected = layer_thresholds(graph, x, chain);
  } catch (const std::exception& e) {
    fail("thresholds", e.what());
    return report;
  }
  if (!(decomposition.thresholds == expected)) {
    fail("thresholds", "declared thresholds differ from the narrow cut sizes of x");
  }
  const int layers = expected.layer_count();
  std::vector<Chain> layer_chains;
  for (int j = 1; j <= layers; ++j) {
    layer_chains.push_back(subchain_at(graph, x, chain, expected.threshold(j)));
  }

  Rational total;
  std::map<EdgeId, Rational> combined;
  std::vector<Rational> assigned_mass(layers + 1);
  std::vector<Rational> feasible_mass(layers + 2);
  for (std::size_t i = 0; i < decomposition.terms.size(); ++i) {
    const LayeredTerm& term = decomposition.terms[i];
    const std::string where = "term " + std::to_string(i + 1);
    if (term.coefficient.sign() <= 0) fail("coefficient", where + " has nonpositive coefficient");
    total += term.coefficient;
    if (!is_spanning_tree(graph, term.tree.edges())) {
      fail("tree", where + " is not a spanning tree");
      continue;
    }
    for (EdgeId e : term.tree.edges()) combined[e] += term.coefficient;

    int smallest = layers + 1;
    for (int j = 1; j <= layers; ++j) {
      if (is_gao_tree(graph, term.tree, layer_chains[j - 1])) {
        smallest = j;
        break;
      }
    }
    feasible_mass[smallest] += term.coefficient;

    if (term.layer < 1 || term.layer > layers) {
      fail("layer", where + " has layer " + std::to_string(term.layer) + " outside 1.." +
                        std::to_string(layers));
      continue;
    }
    assigned_mass[term.layer] += term.coefficient;
    if (!is_gao_tree(graph, term.tree, layer_chains[term.layer - 1])) {
      fail("gao", where + " is not a Gao-tree for layer " + std::to_string(term.layer));
    }
  }

  if (total != Rational(1)) fail("sum", "coefficients sum to " + total.to_string());

  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const auto it = combined.find(e);
    const Rational got = it == combined.end() ? Rational(0) : it->second;
    if (got != x.get(e)) {
      fail("recombination", "edge " + graph.edge_label(e) + ": " + got.to_string() +
                                " != " + x.get(e).to_string());
    }
  }

  Rational assigned_prefix;
  Rational feasible_prefix;
  for (int j = 1; j <= layers; ++j) {
    assigned_prefix += assigned_mass[j];
    feasible_prefix += feasible_mass[j];
    report.gao_prefix_mass.push_back(feasible_prefix);
    const Rational want = expected.prefix_mass(j);
    if (assigned_prefix != want) {
      fail("layer-mass", "layers 1.." + std::to_string(j) + " carry " +
                             assigned_prefix.to_string() + " != " + want.to_string());
    }
    if (feasible_prefix < want) {
      fail("prefix-mass", "layer " + std::to_string(j) + ": Gao-tree mass " +
                              feasible_prefix.to_string() + " < " + want.to_string());
    }
  }
  return report;
}

Rational suitability_epsilon(const Graph& graph, const EdgeVector& x, const Chain& chain,
                             const EdgeSet& edges) {
  const EdgeSet set = make_edge_set(edges);
  const GaoMatroid matroid(graph, chain, graph.all_edges());
  const Rational p(matroid.rank(set));
  const Rational r(rank_graphic(graph, set));
  const Rational value = sum_over(graph, x, set);
  if (p == r) throw SuitabilityUndefined("p(X) = r(X): every epsilon is suitable");
  if (value > r) throw PreconditionViolation("x(X) > r(X): x is not in Sp(G)");
  if (value == r) throw InconsistencyError("x(X) = r(X) > p(X) cannot happen at a chain-point");
  return (r - value) / (r - p);
}

}  // namespace layered
