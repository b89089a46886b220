#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "layered/agreement.hpp"
#include "layered/chain.hpp"
#include "layered/corpus.hpp"
#include "layered/decompose.hpp"
#include "layered/errors.hpp"
#include "layered/io.hpp"

namespace {

using namespace layered;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Settings {
  std::string format = "text";
  bool tsv() const { return format == "tsv"; }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Chain resolve_chain(const Instance& instance) {
  if (instance.chain) return *instance.chain;
  if (!instance.s || !instance.t) {
    throw InputError("instance has neither a chain nor both s and t");
  }
  return derive_chain(instance.graph, instance.x, *instance.s, *instance.t);
}

std::string join_sizes(const std::vector<Rational>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? ", " : "") + sizes[i].to_string();
  return out;
}

int cmd_verify(const Settings& settings, const std::string& path) {
  const Instance instance = parse_instance(read_file(path));
  const Chain chain = resolve_chain(instance);
  const ChainPointReport report = validate_chain_point(instance.graph, instance.x, chain);
  if (settings.tsv()) {
    for (int i = 0; i < chain.size(); ++i) {
      std::cout << "cut\t" << i << '\t' << format_vertex_set(chain[i]) << '\t'
                << (i < static_cast<int>(report.sizes.size()) ? report.sizes[i].to_string() : "")
                << '\n';
    }
    for (const Violation& v : report.violations) {
      std::cout << "violation\t" << v.condition << '\t' << v.detail << '\n';
    }
    std::cout << "result\t" << (report.passed() ? "PASS" : "FAIL") << '\n';
  } else {
    std::cout << "chain-point: " << (report.passed() ? "PASS" : "FAIL") << " (" << chain.size()
              << " cuts, sizes " << join_sizes(report.sizes) << ")\n";
    for (const Violation& v : report.violations) {
      std::cout << "  " << v.condition << ": " << v.detail << '\n';
    }
  }
  return report.passed() ? kPass : kFail;
}

int cmd_chain(const Settings& settings, const std::string& path) {
  const Instance instance = parse_instance(read_file(path));
  if (!instance.s || !instance.t) throw InputError("chain needs s and t in the instance");
  const Chain chain = derive_chain(instance.graph, instance.x, *instance.s, *instance.t);
  const auto sizes = cut_sizes(instance.graph, instance.x, chain);
  for (int i = 0; i < chain.size(); ++i) {
    if (settings.tsv()) {
      std::cout << "cut\t" << i << '\t' << format_vertex_set(chain[i]) << '\t'
                << sizes[i].to_string() << '\n';
    } else {
      std::cout << "chain ";
      for (std::size_t k = 0; k < chain[i].size(); ++k) std::cout << (k ? "," : "") << chain[i][k];
      std::cout << "  # size " << sizes[i].to_string() << '\n';
    }
  }
  return kPass;
}

int cmd_decompose(const Settings& settings, const std::string& path, bool raw, bool trace) {
  const Instance instance = parse_instance(read_file(path));
  const Chain chain = resolve_chain(instance);
  std::vector<PeelRecord> records;
  DecomposeOptions options;
  if (trace) options.trace = &records;
  const LayeredDecomposition d = layered_decompose(instance.graph, instance.x, chain, options);
  const std::vector<LayeredTerm> terms = raw ? d.terms : d.by_tree_and_layer();
  if (settings.tsv()) {
    for (int j = 1; j <= d.thresholds.layer_count(); ++j) {
      std::cout << "lambda\t" << j << '\t' << d.thresholds.lambdas[j - 1].to_string() << '\n';
    }
    for (const LayeredTerm& term : terms) {
      std::cout << "term\t" << term.coefficient.to_string() << '\t' << term.layer << '\t';
      for (std::size_t k = 0; k < term.tree.edges().size(); ++k) {
        std::cout << (k ? " " : "") << instance.graph.edge_label(term.tree.edges()[k]);
      }
      std::cout << '\n';
    }
  } else {
    std::cout << format_decomposition(instance.graph, d.thresholds, terms);
  }
  for (const PeelRecord& r : records) {
    std::cerr << "peel epsilon=" << r.epsilon.to_string() << " layer=" << r.layer
              << " bottleneck=" << describe(instance.graph, r.bottleneck) << '\n';
  }
  return kPass;
}

int cmd_check(const Settings& settings, const std::string& instance_path,
              const std::string& decomposition_path) {
  const Instance instance = parse_instance(read_file(instance_path));
  const Chain chain = resolve_chain(instance);
  const LayeredDecomposition d =
      parse_decomposition(read_file(decomposition_path), instance.graph);
  const VerifyReport report = verify_layered(instance.graph, instance.x, chain, d);
  for (const VerifyFailure& f : report.failures) {
    if (settings.tsv()) {
      std::cout << "failure\t" << f.check << '\t' << f.detail << '\n';
    } else {
      std::cout << "FAIL " << f.check << ": " << f.detail << '\n';
    }
  }
  if (settings.tsv()) {
    std::cout << "result\t" << (report.passed() ? "PASS" : "FAIL") << '\n';
  } else if (report.passed()) {
    std::cout << "decomposition: PASS (" << d.terms.size() << " terms, "
              << d.thresholds.layer_count() << " layers)\n";
  }
  return report.passed() ? kPass : kFail;
}

int cmd_oracle(const Settings& settings, std::uint64_t seed, int count) {
  std::vector<CorpusInstance> instances{fixture_a(), fixture_b(), fixture_c()};
  for (CorpusInstance& c : generate_corpus(seed, count)) instances.push_back(std::move(c));
  int mismatched = 0;
  for (const CorpusInstance& c : instances) {
    const auto problems = check_agreement(c);
    if (!problems.empty()) ++mismatched;
    if (settings.tsv()) {
      std::cout << "instance\t" << c.name << '\t' << (problems.empty() ? "OK" : "MISMATCH") << '\n';
      for (const auto& p : problems) std::cout << "mismatch\t" << c.name << '\t' << p << '\n';
    } else {
      for (const auto& p : problems) std::cout << c.name << ": " << p << '\n';
    }
  }
  if (!settings.tsv()) {
    std::cout << "oracle: " << instances.size() << " instances, " << mismatched
              << " with disagreements\n";
  }
  return mismatched == 0 ? kPass : kFail;
}

int cmd_gen(const std::string& which, std::uint64_t seed, int index) {
  CorpusInstance c = which == "A"   ? fixture_a()
                     : which == "B" ? fixture_b()
                     : which == "C" ? fixture_c()
                     : which == "corpus"
                         ? corpus_instance(seed, index)
                         : throw InputError("unknown fixture '" + which + "' (A, B, C or corpus)");
  std::cout << "# " << c.name << '\n' << format_instance(to_instance(c));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered convex combinations of spanning trees for chain-points"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  std::string instance_path;
  std::string decomposition_path;
  bool raw = false;
  bool trace = false;
  std::uint64_t seed = 1;
  int count = 240;
  int index = 0;
  std::string which;

  auto* verify = app.add_subcommand("verify", "Check the chain-point conditions");
  verify->add_option("instance", instance_path)->required();
  auto* chain = app.add_subcommand("chain", "Derive the chain of narrow s-t cuts");
  chain->add_option("instance", instance_path)->required();
  auto* decompose = app.add_subcommand("decompose", "Compute a layered decomposition");
  decompose->add_option("instance", instance_path)->required();
  decompose->add_flag("--raw", raw, "Terms in extraction order instead of merged");
  decompose->add_flag("--trace", trace, "Print every peel to standard error");
  auto* check = app.add_subcommand("check", "Verify a decomposition file");
  check->add_option("instance", instance_path)->required();
  check->add_option("decomposition", decomposition_path)->required();
  auto* oracle = app.add_subcommand("oracle", "Compare against brute force on the corpus");
  oracle->add_option("--seed", seed)->capture_default_str();
  oracle->add_option("--count", count)->check(CLI::NonNegativeNumber)->capture_default_str();
  auto* gen = app.add_subcommand("gen", "Emit a fixture or corpus instance");
  gen->add_option("which", which, "A, B, C or corpus")->required();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--index", index)->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) return cmd_verify(settings, instance_path);
    if (*chain) return cmd_chain(settings, instance_path);
    if (*decompose) return cmd_decompose(settings, instance_path, raw, trace);
    if (*check) return cmd_check(settings, instance_path, decomposition_path);
    if (*oracle) return cmd_oracle(settings, seed, count);
    if (*gen) return cmd_gen(which, seed, index);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionViolation& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFail;
  } catch (const InconsistencyError& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kInputError;
}
