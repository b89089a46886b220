#include "layered/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "layered/errors.hpp"

namespace layered::oracle {

namespace {

using Mask = std::uint64_t;
__extension__ using Wide = __int128;

void guard_vertices(const Graph& graph, const SizeGuard& guard) {
  if (graph.vertex_count() > guard.max_vertices) {
    throw GuardExceeded("graph has " + std::to_string(graph.vertex_count()) +
                        " vertices; brute force is limited to " +
                        std::to_string(guard.max_vertices));
  }
}

void guard_edges(int edges, const SizeGuard& guard) {
  if (edges > guard.max_edges_for_subset_enum) {
    throw GuardExceeded(std::to_string(edges) + " edges exceed the subset enumeration limit of " +
                        std::to_string(guard.max_edges_for_subset_enum));
  }
}

Mask vertex_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

VertexSet mask_vertices(Mask m) {
  VertexSet out;
  for (int v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

bool inside(const Edge& e, Mask u) { return ((u >> e.u) & 1) && ((u >> e.v) & 1); }
bool across(const Edge& e, Mask u) { return ((u >> e.u) & 1) != ((u >> e.v) & 1); }

Rational induced_value(const Graph& graph, const EdgeVector& x, Mask u) {
  Rational sum;
  for (const auto& [e, v] : x.entries()) {
    if (inside(graph.edges()[e], u)) sum += v;
  }
  return sum;
}

Rational cut_value(const Graph& graph, const EdgeVector& x, Mask u) {
  Rational sum;
  for (const auto& [e, v] : x.entries()) {
    if (across(graph.edges()[e], u)) sum += v;
  }
  return sum;
}

// Connected and acyclic check for a candidate edge list of size n-1.
bool connects_all(const Graph& graph, const std::vector<EdgeId>& edges) {
  const int n = graph.vertex_count();
  std::vector<int> comp(n);
  for (int v = 0; v < n; ++v) comp[v] = v;
  for (EdgeId e : edges) {
    const Edge& ed = graph.edges()[e];
    const int a = comp[ed.u];
    const int b = comp[ed.v];
    if (a == b) return false;
    for (int& c : comp) {
      if (c == b) c = a;
    }
  }
  return std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
}

// Gao-tree test straight from the definition: |T cap delta(V_i)| = 1.
bool crosses_each_once(const Graph& graph, const std::vector<Mask>& chain_masks,
                       const EdgeSet& tree) {
  for (Mask c : chain_masks) {
    int hits = 0;
    for (EdgeId e : tree) hits += across(graph.edges()[e], c) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<Mask> chain_masks(const Chain& chain) {
  std::vector<Mask> out;
  for (const VertexSet& s : chain.sets()) out.push_back(vertex_mask(s));
  return out;
}

Mask edge_mask_of(const EdgeSet& edges, const EdgeSet& ground) {
  Mask m = 0;
  for (EdgeId e : edges) {
    const auto it = std::lower_bound(ground.begin(), ground.end(), e);
    if (it == ground.end() || *it != e) throw InputError("edge outside the ground set");
    m |= Mask{1} << (it - ground.begin());
  }
  return m;
}

}  // namespace

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& graph, const SizeGuard& guard) {
  guard_vertices(graph, guard);
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  const int k = n - 1;
  std::vector<EdgeSet> trees;
  if (k == 0) {
    trees.emplace_back();
    return trees;
  }
  if (m < k) return trees;
  std::vector<EdgeId> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    if (connects_all(graph, pick)) trees.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return trees;
}

Rational count_spanning_trees_matrix_tree(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n == 1) return Rational(1);
  const int d = n - 1;
  std::vector<std::vector<Rational>> lap(d, std::vector<Rational>(d));
  for (const Edge& e : graph.edges()) {
    if (e.u < d) lap[e.u][e.u] += Rational(1);
    if (e.v < d) lap[e.v][e.v] += Rational(1);
    if (e.u < d && e.v < d) {
      lap[e.u][e.v] -= Rational(1);
      lap[e.v][e.u] -= Rational(1);
    }
  }
  Rational det(1);
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (pivot < d && lap[pivot][col].is_zero()) ++pivot;
    if (pivot == d) return Rational(0);
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (int row = col + 1; row < d; ++row) {
      if (lap[row][col].is_zero()) continue;
      const Rational factor = lap[row][col] / lap[col][col];
      for (int c = col; c < d; ++c) lap[row][c] -= factor * lap[col][c];
    }
  }
  return det;
}

bool sp_membership_bf(const Graph& graph, const EdgeVector& y, const SizeGuard& guard) {
  guard_vertices(graph, guard);
  const int n = graph.vertex_count();
  for (const auto& [e, v] : y.entries()) {
    if (e < 0 || e >= graph.edge_count() || v.sign() < 0) return false;
  }
  if (y.total() != Rational(n - 1)) return false;
  for (Mask u = 1; u < (Mask{1} << n); ++u) {
    if (induced_value(graph, y, u) > Rational(std::popcount(u) - 1)) return false;
  }
  return true;
}

bool is_chain_point_bf(const Graph& graph, const EdgeVector& x, const Chain& chain,
                       const SizeGuard& guard) {
  if (!sp_membership_bf(graph, x, guard)) return false;
  const auto masks = chain_masks(chain);
  const int k = static_cast<int>(masks.size()) - 1;
  if (cut_value(graph, x, masks[0]) != Rational(1)) return false;
  if (cut_value(graph, x, masks[k]) != Rational(1)) return false;
  for (int i = 1; i < k; ++i) {
    if (cut_value(graph, x, masks[i]) >= Rational(2)) return false;
  }
  for (int i = 1; i <= k; ++i) {
    const Mask level = masks[i] & ~masks[i - 1];
    Rational degrees;
    for (const auto& [e, v] : x.entries()) {
      const Edge& ed = graph.edges()[e];
      degrees += v * Rational(((level >> ed.u) & 1) + ((level >> ed.v) & 1));
    }
    if (degrees != Rational(2L * std::popcount(level))) return false;
  }
  return true;
}

int rank_bf(const IndependencePredicate& independent, const EdgeSet& x, const SizeGuard& guard) {
  const EdgeSet items = make_edge_set(x);
  const int m = static_cast<int>(items.size());
  guard_edges(m, guard);
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    EdgeSet subset;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1) subset.push_back(items[i]);
    }
    if (independent(subset)) best = size;
  }
  return best;
}

IndependencePredicate forest_predicate(const Graph& graph) {
  return [graph](const EdgeSet& edges) {
    const int n = graph.vertex_count();
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    for (EdgeId e : edges) {
      const Edge& ed = graph.edge(e);
      const int a = comp[ed.u];
      const int b = comp[ed.v];
      if (a == b) return false;
      for (int& c : comp) {
        if (c == b) c = a;
      }
    }
    return true;
  };
}

std::vector<EdgeSet> gao_trees_bf(const Graph& graph, const Chain& chain, const EdgeSet& ground,
                                  const SizeGuard& guard) {
  const auto masks = chain_masks(chain);
  std::vector<EdgeSet> out;
  for (EdgeSet& tree : enumerate_spanning_trees(graph, guard)) {
    if (!std::includes(ground.begin(), ground.end(), tree.begin(), tree.end())) continue;
    if (crosses_each_once(graph, masks, tree)) out.push_back(std::move(tree));
  }
  return out;
}

IndependencePredicate gao_predicate(const Graph& graph, const Chain& chain, const EdgeSet& ground,
                                    const SizeGuard& guard) {
  auto trees = gao_trees_bf(graph, chain, make_edge_set(ground), guard);
  return [trees = std::move(trees)](const EdgeSet& edges) {
    const EdgeSet sorted = make_edge_set(edges);
    for (const EdgeSet& t : trees) {
      if (std::includes(t.begin(), t.end(), sorted.begin(), sorted.end())) return true;
    }
    return false;
  };
}

SubsetRanks::SubsetRanks(int edge_count, const std::vector<std::uint64_t>& bases)
    : rank_(std::size_t{1} << edge_count, 0) {
  const Mask full = (Mask{1} << edge_count) - 1;
  std::vector<char> independent(rank_.size(), 0);
  for (Mask b : bases) independent[b] = 1;
  for (Mask s = full + 1; s-- > 0;) {
    if (independent[s]) continue;
    for (int i = 0; i < edge_count; ++i) {
      if (!((s >> i) & 1) && independent[s | (Mask{1} << i)]) {
        independent[s] = 1;
        break;
      }
    }
  }
  for (Mask s = 0; s <= full; ++s) {
    if (independent[s]) {
      rank_[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (int i = 0; i < edge_count; ++i) {
      if ((s >> i) & 1) best = std::max(best, rank_[s & ~(Mask{1} << i)]);
    }
    rank_[s] = best;
  }
}

PartitionCondition partition_condition_bf(const Graph& graph, const Chain& chain,
                                          const EdgeVector& x, const Rational& lambda,
                                          const SizeGuard& guard) {
  const int m = graph.edge_count();
  guard_edges(m, guard);
  const EdgeSet all = graph.all_edges();
  std::vector<Mask> tree_masks;
  std::vector<Mask> gao_masks;
  const auto masks = chain_masks(chain);
  for (const EdgeSet& t : enumerate_spanning_trees(graph, guard)) {
    tree_masks.push_back(edge_mask_of(t, all));
    if (crosses_each_once(graph, masks, t)) gao_masks.push_back(edge_mask_of(t, all));
  }
  if (gao_masks.empty()) throw InputError("graph has no Gao-tree for the chain");
  const SubsetRanks p(m, gao_masks);
  const SubsetRanks r(m, tree_masks);

  // Scale everything by den(lambda) * lcm of the denominators of x so the
  // sweep runs on integers.
  mpz_class common = 1;
  for (const auto& [_, v] : x.entries()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.raw().get_den_mpz_t());
  }
  const mpz_class lam_num = lambda.raw().get_num();
  const mpz_class lam_den = lambda.raw().get_den();
  auto to_int = [](const mpz_class& z) {
    if (!z.fits_slong_p() || mpz_sizeinbase(z.get_mpz_t(), 2) > 40) {
      throw GuardExceeded("denominators too large for the integer sweep");
    }
    return static_cast<Wide>(z.get_si());
  };
  const Wide d = to_int(common);
  const Wide a = to_int(lam_num);
  const Wide b = to_int(lam_den);
  std::vector<Wide> scaled_x(m, 0);
  for (const auto& [e, v] : x.entries()) {
    const mpz_class q = v.raw().get_num() * (common / v.raw().get_den());
    scaled_x[e] = to_int(q);
  }

  std::vector<Wide> xsum(std::size_t{1} << m, 0);
  Wide best = std::numeric_limits<Wide>::max();
  Mask argbest = 0;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (s) xsum[s] = xsum[s & (s - 1)] + scaled_x[std::countr_zero(s)];
    const Wide value = d * a * p.rank(s) + d * (b - a) * r.rank(s) - b * xsum[s];
    if (value < best) {
      best = value;
      argbest = s;
    }
  }

  PartitionCondition out;
  for (int i = 0; i < m; ++i) {
    if ((argbest >> i) & 1) out.worst.push_back(i);
  }
  Rational x_worst;
  for (EdgeId e : out.worst) x_worst += x.get(e);
  out.minimum = lambda * Rational(p.rank(argbest)) +
                (Rational(1) - lambda) * Rational(r.rank(argbest)) - x_worst;
  out.holds = best >= 0;
  return out;
}

Chain derive_chain_bf(const Graph& graph, const EdgeVector& x, Vertex s, Vertex t,
                      const SizeGuard& guard) {
  guard_vertices(graph, guard);
  const int n = graph.vertex_count();
  std::vector<Mask> narrow;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    if (!((a >> s) & 1) || ((a >> t) & 1)) continue;
    if (cut_value(graph, x, a) < Rational(2)) narrow.push_back(a);
  }
  for (Mask a : narrow) {
    for (Mask b : narrow) {
      if ((a & ~b) && (b & ~a)) throw InconsistencyError("narrow cuts cross");
    }
  }
  std::sort(narrow.begin(), narrow.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<VertexSet> sets;
  for (Mask a : narrow) sets.push_back(mask_vertices(a));
  return Chain(n, std::move(sets));
}

std::vector<VertexSet> tight_sets_bf(const Graph& graph, const EdgeVector& x,
                                     const SizeGuard& guard) {
  guard_vertices(graph, guard);
  std::vector<VertexSet> out;
  for (Mask u = 1; u < (Mask{1} << graph.vertex_count()); ++u) {
    if (induced_value(graph, x, u) == Rational(std::popcount(u) - 1)) {
      out.push_back(mask_vertices(u));
    }
  }
  return out;
}

ExcessBf max_modular_excess_bf(const Graph& graph, const EdgeVector& y, const Rational& kappa,
                               Vertex forced, const SizeGuard& guard) {
  guard_vertices(graph, guard);
  ExcessBf out;
  bool first = true;
  for (Mask u = 1; u < (Mask{1} << graph.vertex_count()); ++u) {
    if (forced >= 0 && !((u >> forced) & 1)) continue;
    const Rational value = induced_value(graph, y, u) - kappa * Rational(std::popcount(u));
    if (first || value > out.value) {
      out.value = value;
      out.maximizers.clear();
      first = false;
    }
    if (value == out.value) out.maximizers.push_back(mask_vertices(u));
  }
  return out;
}

Rational lambda_max_bf(const Graph& graph, const EdgeVector& x, const EdgeSet& tree,
                       const SizeGuard& guard) {
  guard_vertices(graph, guard);
  if (x == EdgeVector::indicator(tree)) return Rational(1);
  Rational best(1);
  for (EdgeId e : tree) best = std::min(best, x.get(e));
  for (Mask u = 1; u < (Mask{1} << graph.vertex_count()); ++u) {
    long tree_inside = 0;
    for (EdgeId e : tree) tree_inside += inside(graph.edges()[e], u) ? 1 : 0;
    const long rank = std::popcount(u) - 1;
    if (rank - tree_inside <= 0) continue;
    const Rational ratio =
        (Rational(rank) - induced_value(graph, x, u)) / Rational(rank - tree_inside);
    best = std::min(best, ratio);
  }
  return best;
}

}  // namespace layered::oracle
