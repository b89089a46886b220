#include "layered/io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace layered {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

// Splits into lines, strips comments and blank lines, keeps line numbers.
std::vector<std::pair<int, std::vector<std::string>>> directives(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

long parse_int(int line, const std::string& token, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

Rational parse_rational(int line, const std::string& token) {
  try {
    return Rational::parse(token);
  } catch (const std::exception&) {
    throw ParseError(line, "malformed rational '" + token + "'");
  }
}

void expect_arity(int line, const std::vector<std::string>& tokens, std::size_t count) {
  if (tokens.size() != count) {
    throw ParseError(line, "'" + tokens[0] + "' takes " + std::to_string(count - 1) +
                               " argument(s)");
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Instance parse_instance(std::string_view text) {
  const auto lines = directives(text);
  if (lines.empty() || lines.front().second[0] != "graph") {
    throw ParseError(lines.empty() ? 0 : lines.front().first, "file must start with 'graph <n>'");
  }
  expect_arity(lines.front().first, lines.front().second, 2);
  const long n = parse_int(lines.front().first, lines.front().second[1], "vertex count");
  if (n < 1 || n > 1 << 20) throw ParseError(lines.front().first, "vertex count out of range");

  auto vertex = [n](int line, const std::string& token) {
    const long v = parse_int(line, token, "vertex");
    if (v < 0 || v >= n) {
      throw ParseError(line, "vertex " + token + " out of range 0.." + std::to_string(n - 1));
    }
    return static_cast<Vertex>(v);
  };

  std::vector<Edge> edges;
  std::vector<Rational> values;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::optional<Vertex> s;
  std::optional<Vertex> t;
  std::vector<VertexSet> chain_sets;
  int first_chain_line = 0;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    const std::string& head = tokens[0];
    if (head == "s" || head == "t") {
      expect_arity(line, tokens, 2);
      auto& slot = head == "s" ? s : t;
      if (slot) throw ParseError(line, "duplicate '" + head + "'");
      slot = vertex(line, tokens[1]);
    } else if (head == "edge") {
      expect_arity(line, tokens, 4);
      const Vertex a = vertex(line, tokens[1]);
      const Vertex b = vertex(line, tokens[2]);
      if (a == b) throw ParseError(line, "self-loop at vertex " + tokens[1]);
      const std::pair key{std::min(a, b), std::max(a, b)};
      if (!seen.insert(key).second) {
        throw ParseError(line, "duplicate edge " + tokens[1] + "-" + tokens[2]);
      }
      const Rational value = parse_rational(line, tokens[3]);
      if (value.sign() < 0) throw ParseError(line, "negative edge value " + tokens[3]);
      edges.push_back({key.first, key.second});
      values.push_back(value);
    } else if (head == "chain") {
      expect_arity(line, tokens, 2);
      std::vector<Vertex> members;
      std::string_view rest = tokens[1];
      while (true) {
        const std::size_t comma = rest.find(',');
        members.push_back(vertex(line, std::string(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      VertexSet set = make_vertex_set(members);
      if (set.size() != members.size()) throw ParseError(line, "repeated vertex in chain set");
      if (!chain_sets.empty() &&
          (set.size() <= chain_sets.back().size() || !is_subset(chain_sets.back(), set))) {
        throw ParseError(line, "invalid chain: set does not strictly contain the previous one");
      }
      if (chain_sets.empty()) first_chain_line = line;
      chain_sets.push_back(std::move(set));
    } else if (head == "graph") {
      throw ParseError(line, "duplicate 'graph'");
    } else {
      throw ParseError(line, "unknown directive '" + head + "'");
    }
  }
  if (s && t && *s == *t) throw ParseError(0, "s and t coincide");

  Instance out{Graph(static_cast<int>(n), edges), EdgeVector(), s, t, std::nullopt};
  for (std::size_t e = 0; e < values.size(); ++e) out.x.set(static_cast<EdgeId>(e), values[e]);
  if (!chain_sets.empty()) {
    try {
      out.chain = Chain(static_cast<int>(n), std::move(chain_sets));
    } catch (const InputError& e) {
      throw ParseError(first_chain_line, std::string("invalid chain: ") + e.what());
    }
  }
  return out;
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  out << "graph " << instance.graph.vertex_count() << '\n';
  if (instance.s) out << "s " << *instance.s << '\n';
  if (instance.t) out << "t " << *instance.t << '\n';
  for (EdgeId e = 0; e < instance.graph.edge_count(); ++e) {
    const Edge& edge = instance.graph.edge(e);
    out << "edge " << edge.u << ' ' << edge.v << ' ' << instance.x.get(e).to_string() << '\n';
  }
  if (instance.chain) {
    for (const VertexSet& set : instance.chain->sets()) {
      out << "chain ";
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
      out << '\n';
    }
  }
  return out.str();
}

Instance to_instance(const CorpusInstance& corpus) {
  return {corpus.graph, corpus.x, corpus.s, corpus.t, corpus.chain};
}

LayeredDecomposition parse_decomposition(std::string_view text, const Graph& graph) {
  const auto lines = directives(text);
  if (lines.empty() || lines.front().second[0] != "layers") {
    throw ParseError(lines.empty() ? 0 : lines.front().first, "file must start with 'layers <l>'");
  }
  expect_arity(lines.front().first, lines.front().second, 2);
  const long layers = parse_int(lines.front().first, lines.front().second[1], "layer count");
  if (layers < 1) throw ParseError(lines.front().first, "layer count must be positive");

  LayeredDecomposition out;
  Rational prefix;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens[0] == "lambda") {
      expect_arity(line, tokens, 3);
      const long j = parse_int(line, tokens[1], "layer index");
      if (j != static_cast<long>(out.thresholds.lambdas.size()) + 1 || j > layers) {
        throw ParseError(line, "lambda lines must list layers 1.." + std::to_string(layers) +
                                   " in order");
      }
      const Rational lambda = parse_rational(line, tokens[2]);
      prefix += lambda;
      out.thresholds.lambdas.push_back(lambda);
      out.thresholds.sizes.push_back(Rational(2) - prefix);
    } else if (tokens[0] == "term") {
      if (tokens.size() < 3) throw ParseError(line, "'term' needs a coefficient and a layer");
      const Rational coefficient = parse_rational(line, tokens[1]);
      const long j = parse_int(line, tokens[2], "layer index");
      std::vector<EdgeId> tree_edges;
      for (std::size_t k = 3; k < tokens.size(); ++k) {
        const std::string& label = tokens[k];
        const std::size_t dash = label.find('-');
        if (dash == std::string::npos) throw ParseError(line, "edge must be written u-v");
        const long a = parse_int(line, label.substr(0, dash), "vertex");
        const long b = parse_int(line, label.substr(dash + 1), "vertex");
        if (a < 0 || b < 0 || a >= graph.vertex_count() || b >= graph.vertex_count()) {
          throw ParseError(line, "edge " + label + " has a vertex out of range");
        }
        const auto e = graph.find_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        if (!e) throw ParseError(line, "edge " + label + " is not in the graph");
        tree_edges.push_back(*e);
      }
      const EdgeSet sorted = make_edge_set(tree_edges);
      if (sorted.size() != tree_edges.size()) throw ParseError(line, "repeated tree edge");
      try {
        out.terms.push_back({coefficient, Tree(graph, sorted), static_cast<int>(j)});
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
    } else {
      throw ParseError(line, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (static_cast<long>(out.thresholds.lambdas.size()) != layers) {
    throw ParseError(0, "expected " + std::to_string(layers) + " lambda lines");
  }
  return out;
}

std::string format_decomposition(const Graph& graph, const LayerThresholds& thresholds,
                                 const std::vector<LayeredTerm>& terms) {
  std::ostringstream out;
  out << "layers " << thresholds.layer_count() << '\n';
  for (int j = 1; j <= thresholds.layer_count(); ++j) {
    out << "lambda " << j << ' ' << thresholds.lambdas[j - 1].to_string() << '\n';
  }
  for (const LayeredTerm& term : terms) {
    out << "term " << term.coefficient.to_string() << ' ' << term.layer;
    for (EdgeId e : term.tree.edges()) out << ' ' << graph.edge_label(e);
    out << '\n';
  }
  return out.str();
}

}  // namespace layered
