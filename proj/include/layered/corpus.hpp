#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layered/chain.hpp"
#include "layered/graph.hpp"

namespace layered {

struct CorpusInstance {
  std::string name;
  Graph graph;
  EdgeVector x;
  Chain chain;
  std::optional<Vertex> s;
  std::optional<Vertex> t;
};

/// Path s=0,1,2,3,4=t with chords 0-2 and 2-4; x is the path itself.
CorpusInstance fixture_a();
/// K4 on s=0,a=1,b=2,t=3: two Hamiltonian paths at 1/2 each, one layer.
CorpusInstance fixture_b();
/// K4 on s=0,a=1,b=2,t=3 with cuts of size 1, 3/2, 1: two layers.
CorpusInstance fixture_c();

struct CorpusBucket {
  int vertices;
  int layers;
};

/// The (n, l) buckets covered by the random corpus: n = 3..6, l <= min(3, n-2).
const std::vector<CorpusBucket>& corpus_buckets();

/// Instance `index` of the corpus for `seed`. Instance i lands in bucket
/// i mod |buckets| and depends only on (seed, i).
CorpusInstance corpus_instance(std::uint64_t seed, int index);

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count);

}  // namespace layered
