#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "layered/chain.hpp"
#include "layered/corpus.hpp"
#include "layered/decompose.hpp"
#include "layered/errors.hpp"
#include "layered/graph.hpp"

namespace layered {

/// Syntax or validation error in a text file; `line` is 1-based (0 when the
/// problem concerns the file as a whole).
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct Instance {
  Graph graph;
  EdgeVector x;
  std::optional<Vertex> s;
  std::optional<Vertex> t;
  std::optional<Chain> chain;
};

/// Instance grammar, one directive per line, '#' starts a comment:
///   graph <n>          (first directive)
///   s <v> / t <v>
///   edge <u> <v> <p>[/<q>]   (zero allowed, negative rejected)
///   chain <v>,<v>,...  (repeated, strictly increasing)
Instance parse_instance(std::string_view text);

/// Canonical text: graph, s, t, edges in id order, chain lines.
std::string format_instance(const Instance& instance);

Instance to_instance(const CorpusInstance& corpus);

/// Decomposition grammar:
///   layers <l>
///   lambda <j> <p/q>          (j = 1..l, in order)
///   term <p/q> <j> <u-v> ...  (tree edges by endpoints)
LayeredDecomposition parse_decomposition(std::string_view text, const Graph& graph);

/// One term line per entry of `terms`, tree edges in id order.
std::string format_decomposition(const Graph& graph, const LayerThresholds& thresholds,
                                 const std::vector<LayeredTerm>& terms);

}  // namespace layered
