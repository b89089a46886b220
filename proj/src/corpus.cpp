#include "layered/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "layered/errors.hpp"
#include "layered/oracle.hpp"

namespace layered {

namespace {

const std::vector<Edge> kK4 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}};

EdgeVector from_values(const std::vector<Rational>& values) {
  EdgeVector x;
  for (std::size_t e = 0; e < values.size(); ++e) x.set(static_cast<EdgeId>(e), values[e]);
  return x;
}

// Platform-independent sampling: the engine is fully specified by the
// standard, the library distributions are not.
class Sampler {
 public:
  Sampler(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    engine_.seed(seq);
  }
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent) { return uniform(0, 99) < percent; }
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[uniform(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

int distinct_sizes(const std::vector<Rational>& sizes) {
  return static_cast<int>(std::set<Rational>(sizes.begin(), sizes.end()).size());
}

struct Draft {
  int n;
  std::vector<Edge> edges;
  std::vector<Rational> values;
};

Draft mix_trees(const std::vector<EdgeSet>& trees, const std::vector<int>& weights, int n,
                std::vector<Edge> edges) {
  const int total = std::accumulate(weights.begin(), weights.end(), 0);
  std::vector<Rational> values(edges.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (EdgeId e : trees[i]) values[e] += Rational(weights[i], total);
  }
  return {n, std::move(edges), std::move(values)};
}

// Random levels, a random Gao-tree plus extra edges, then a random
// combination of trees that keep every level's degree sum at 2|L_i|.
std::optional<CorpusInstance> try_mixture(Sampler& rng, int n, int layers) {
  const int level_count = layers == 1 ? rng.uniform(2, n) : rng.uniform(layers + 2, n);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<int> breaks(n - 1);
  std::iota(breaks.begin(), breaks.end(), 1);
  rng.shuffle(breaks);
  breaks.resize(level_count - 1);
  std::sort(breaks.begin(), breaks.end());
  breaks.push_back(n);
  std::vector<int> level_of(n);
  std::vector<VertexSet> sets;
  VertexSet prefix;
  int start = 0;
  for (int i = 0; i < level_count; ++i) {
    for (int p = start; p < breaks[i]; ++p) {
      level_of[order[p]] = i;
      prefix.push_back(order[p]);
    }
    start = breaks[i];
    if (i + 1 < level_count) sets.push_back(make_vertex_set(prefix));
  }

  std::set<std::pair<Vertex, Vertex>> chosen;
  auto add = [&chosen](Vertex a, Vertex b) { chosen.insert({std::min(a, b), std::max(a, b)}); };
  start = 0;
  for (int i = 0; i < level_count; ++i) {
    for (int p = start + 1; p < breaks[i]; ++p) add(order[p], order[rng.uniform(start, p - 1)]);
    if (i > 0) add(order[rng.uniform(start, breaks[i] - 1)], order[rng.uniform(0, start - 1)]);
    start = breaks[i];
  }
  const int density = rng.uniform(25, 70);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.coin(density)) add(a, b);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : chosen) edges.push_back({a, b});
  rng.shuffle(edges);
  const Graph graph(n, edges);

  std::vector<EdgeSet> gao;
  std::vector<EdgeSet> other;
  const int last = level_count - 1;
  for (const EdgeSet& t : oracle::enumerate_spanning_trees(graph)) {
    std::vector<int> degree_sum(level_count, 0);
    std::vector<int> crossing(level_count - 1, 0);
    bool gao_tree = true;
    for (EdgeId e : t) {
      const int a = level_of[edges[e].u];
      const int b = level_of[edges[e].v];
      degree_sum[a] += 1;
      degree_sum[b] += 1;
      for (int c = std::min(a, b); c < std::max(a, b); ++c) crossing[c] += 1;
      if (std::abs(a - b) > 1) gao_tree = false;
    }
    bool balanced = crossing.front() == 1 && crossing.back() == 1;
    for (int i = 1; i < last && balanced; ++i) {
      const int size = static_cast<int>(std::count(level_of.begin(), level_of.end(), i));
      balanced = degree_sum[i] == 2 * size;
    }
    if (!balanced) continue;
    for (int c : crossing) gao_tree = gao_tree && c == 1;
    (gao_tree ? gao : other).push_back(t);
  }
  if (gao.empty()) return std::nullopt;

  rng.shuffle(gao);
  rng.shuffle(other);
  std::vector<EdgeSet> picked;
  std::vector<int> weights;
  const int gao_count = std::min<int>(static_cast<int>(gao.size()), rng.uniform(1, 3));
  for (int i = 0; i < gao_count; ++i) {
    picked.push_back(gao[i]);
    weights.push_back(rng.uniform(1, 6));
  }
  const int wanted = layers == 1 ? rng.uniform(0, 1) : rng.uniform(1, 2);
  const int other_count = std::min<int>(static_cast<int>(other.size()), wanted);
  for (int i = 0; i < other_count; ++i) {
    picked.push_back(other[i]);
    weights.push_back(rng.uniform(1, 3));
  }
  Draft draft = mix_trees(picked, weights, n, edges);
  const EdgeVector x = from_values(draft.values);
  const Chain chain(n, sets);
  if (!oracle::is_chain_point_bf(graph, x, chain)) return std::nullopt;
  // Only the narrow part of the sampled chain is a chain for x.
  const Chain narrow = narrow_subchain(graph, x, chain);
  if (!(narrow == chain)) return std::nullopt;
  if (distinct_sizes(cut_sizes(graph, x, chain)) != layers) return std::nullopt;
  return CorpusInstance{"", graph, x, chain, std::nullopt, std::nullopt};
}

// A convex combination of Hamiltonian s-t paths, with the chain read off
// the point by enumeration.
std::optional<CorpusInstance> try_paths(Sampler& rng, int n, int layers) {
  std::vector<Vertex> middle(n);
  std::iota(middle.begin(), middle.end(), 0);
  rng.shuffle(middle);
  const Vertex s = middle[0];
  const Vertex t = middle[1];
  middle.erase(middle.begin(), middle.begin() + 2);

  std::set<std::pair<Vertex, Vertex>> chosen;
  auto add = [&chosen](Vertex a, Vertex b) { chosen.insert({std::min(a, b), std::max(a, b)}); };
  std::vector<std::vector<Vertex>> paths;
  const int path_count = rng.uniform(2, 4);
  for (int i = 0; i < path_count; ++i) {
    rng.shuffle(middle);
    std::vector<Vertex> path{s};
    path.insert(path.end(), middle.begin(), middle.end());
    path.push_back(t);
    for (std::size_t p = 0; p + 1 < path.size(); ++p) add(path[p], path[p + 1]);
    paths.push_back(std::move(path));
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.coin(20)) add(a, b);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : chosen) edges.push_back({a, b});
  rng.shuffle(edges);
  const Graph graph(n, edges);

  std::vector<EdgeSet> trees;
  std::vector<int> weights;
  for (const auto& path : paths) {
    EdgeSet t_edges;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) {
      t_edges.push_back(*graph.find_edge(path[p], path[p + 1]));
    }
    trees.push_back(make_edge_set(t_edges));
    weights.push_back(rng.uniform(1, 5));
  }
  const Draft draft = mix_trees(trees, weights, n, edges);
  const EdgeVector x = from_values(draft.values);
  std::optional<Chain> chain;
  try {
    chain = oracle::derive_chain_bf(graph, x, s, t);
  } catch (const InconsistencyError&) {
    return std::nullopt;
  }
  if (chain->size() == 0 || (*chain)[0] != VertexSet{s}) return std::nullopt;
  if (!oracle::is_chain_point_bf(graph, x, *chain)) return std::nullopt;
  if (distinct_sizes(cut_sizes(graph, x, *chain)) != layers) return std::nullopt;
  return CorpusInstance{"", graph, x, *chain, s, t};
}

}  // namespace

CorpusInstance fixture_a() {
  const Graph graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}});
  const EdgeVector x = EdgeVector::indicator({0, 1, 2, 3});
  return {"fixture-A", graph, x, Chain(5, {{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}}), 0, 4};
}

CorpusInstance fixture_b() {
  const Rational h(1, 2);
  return {"fixture-B", Graph(4, kK4), from_values({h, h, 1, h, h, 0}),
          Chain(4, {{0}, {0, 1, 2}}), 0, 3};
}

CorpusInstance fixture_c() {
  const Rational q(1, 4);
  const Rational tq(3, 4);
  return {"fixture-C", Graph(4, kK4), from_values({tq, q, 1, q, tq, 0}),
          Chain(4, {{0}, {0, 1}, {0, 1, 2}}), 0, 3};
}

const std::vector<CorpusBucket>& corpus_buckets() {
  static const std::vector<CorpusBucket> buckets = [] {
    std::vector<CorpusBucket> out;
    for (int n = 3; n <= 6; ++n) {
      for (int l = 1; l <= std::min(3, n - 2); ++l) out.push_back({n, l});
    }
    return out;
  }();
  return buckets;
}

CorpusInstance corpus_instance(std::uint64_t seed, int index) {
  if (index < 0) throw InputError("corpus index must be nonnegative");
  const auto& buckets = corpus_buckets();
  const CorpusBucket bucket = buckets[index % buckets.size()];
  Sampler rng(seed, index);
  const bool paths_first = (index / static_cast<int>(buckets.size())) % 3 == 2;
  constexpr int kAttempts = 20000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const bool use_paths = paths_first && attempt < 200;
    auto made = use_paths ? try_paths(rng, bucket.vertices, bucket.layers)
                          : try_mixture(rng, bucket.vertices, bucket.layers);
    if (made) {
      made->name = "corpus-" + std::to_string(seed) + "-" + std::to_string(index) + "-n" +
                   std::to_string(bucket.vertices) + "-l" + std::to_string(bucket.layers) +
                   (use_paths ? "-paths" : "-mix");
      return *std::move(made);
    }
  }
  throw InternalError("no corpus sample for n=" + std::to_string(bucket.vertices) +
                      " l=" + std::to_string(bucket.layers));
}

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count) {
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(corpus_instance(seed, i));
  return out;
}

}  // namespace layered
