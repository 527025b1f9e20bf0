#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pavgen/generator.hpp"
#include "pavgen/oracle.hpp"
#include "pavgen/rules.hpp"
#include "pavgen/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const char* kEpsilon = "ε";

/// Output stream selector: stdout by default, a file with --output.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int oracle_guard_from_env() {
  if (const char* raw = std::getenv("PAVGEN_GUARD")) {
    try {
      return std::stoi(raw);
    } catch (const std::exception&) {
      throw std::runtime_error("PAVGEN_GUARD is not an integer");
    }
  }
  return pavgen::kOracleOnesGuard;
}

std::string display(const pavgen::Word& w) {
  return w.empty() ? std::string(kEpsilon) : w.bits();
}

nlohmann::json node_record(const pavgen::GenerationNode& node) {
  nlohmann::json record{{"word", node.word.bits()},
                        {"ones", node.ones},
                        {"label", node.label}};
  if (node.parent_edge.has_value()) {
    record["parent"] = node.parent_edge->parent.bits();
    record["h"] = node.parent_edge->h;
    record["branch"] = node.parent_edge->branch.label();
  } else {
    record["parent"] = nullptr;
    record["h"] = nullptr;
    record["branch"] = nullptr;
  }
  return record;
}

int cmd_generate(int j, int n, const std::string& format,
                 const std::string& output, const std::string& traversal) {
  pavgen::PatternParam pattern(j);
  OutputTarget target(output);
  std::ostream& out = target.stream();
  const pavgen::Traversal order = traversal == "bfs"
                                      ? pavgen::Traversal::BreadthFirst
                                      : pavgen::Traversal::DepthFirst;
  pavgen::GenerationConfig config{pattern, n, order, false};
  if (format == "jsonl") {
    pavgen::generate_all(config, [&out](const pavgen::GenerationNode& node) {
      out << node_record(node).dump() << '\n';
    });
  } else {
    pavgen::generate_all(config, [&out](const pavgen::GenerationNode& node) {
      out << display(node.word) << '\n';
    });
  }
  return kExitOk;
}

int cmd_count(int j, int n_max, const std::string& output) {
  pavgen::PatternParam pattern(j);
  OutputTarget target(output);
  const std::vector<std::uint64_t> counts = pavgen::count_by_ones(pattern, n_max);
  std::ostream& out = target.stream();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out << (i > 0 ? " " : "") << counts[i];
  }
  out << '\n';
  return kExitOk;
}

int cmd_verify(int j, int n_max, int prop_len, const std::string& format,
               const std::string& output) {
  pavgen::PatternParam pattern(j);
  const int guard = oracle_guard_from_env();
  if (n_max > guard) {
    std::cerr << "verify: n=" << n_max << " exceeds the oracle guard of "
              << guard << " (set PAVGEN_GUARD to raise it)\n";
    return kExitUsage;
  }
  if (prop_len <= 0) prop_len = std::min(2 * n_max, 14);
  if (prop_len > pavgen::kPropositionLengthGuard) {
    std::cerr << "verify: --prop-len " << prop_len
              << " exceeds the guard of " << pavgen::kPropositionLengthGuard
              << "\n";
    return kExitUsage;
  }

  OutputTarget target(output);
  std::ostream& out = target.stream();
  bool all_pass = true;
  nlohmann::json summary;
  summary["equivalence"] = nlohmann::json::array();

  for (int n = 0; n <= n_max; ++n) {
    const pavgen::OracleReport report =
        pavgen::check_equivalence(pattern, n, guard);
    all_pass = all_pass && report.pass();
    if (format == "json") {
      summary["equivalence"].push_back(report.to_json());
    } else {
      out << report.text();
    }
  }

  const pavgen::ParentUniquenessReport uniqueness =
      pavgen::check_parent_uniqueness(pattern, n_max, guard);
  all_pass = all_pass && uniqueness.pass();

  const pavgen::PropositionReport propositions =
      pavgen::check_propositions(pattern, prop_len);
  all_pass = all_pass && propositions.pass();

  if (format == "json") {
    summary["parent_uniqueness"] = uniqueness.to_json();
    summary["propositions"] = propositions.to_json();
    summary["pass"] = all_pass;
    out << summary.dump(2) << '\n';
  } else {
    out << uniqueness.text() << propositions.text()
        << (all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

const char* rule_family(const pavgen::ExpansionCase& c) {
  switch (c.suffix_class) {
    case pavgen::SuffixClass::NegRise:
      return "neg-rise-k0";
    case pavgen::SuffixClass::TrailingPeaks:
      return c.k == 0 ? "trailing-peaks-k0"
                      : (c.k == 1 ? "trailing-peaks-k1" : "trailing-peaks-k2plus");
    case pavgen::SuffixClass::Plain:
      return c.k == 0 ? "plain-k0" : (c.k == 1 ? "plain-k1" : "plain-k2plus");
  }
  return "?";
}

int cmd_classify(const std::string& text, int j) {
  pavgen::PatternParam pattern(j);
  const pavgen::Word word(text);
  std::cout << "word: " << display(word) << "\n"
            << "pattern: " << pattern.forbidden() << " (j=" << j << ")\n";
  const std::vector<std::size_t> hits =
      pavgen::occurrences(word, pattern.forbidden());
  if (!hits.empty()) {
    std::cout << "contains forbidden factor at index " << hits[0];
    for (std::size_t i = 1; i < hits.size(); ++i) std::cout << ", " << hits[i];
    std::cout << "\n";
    return kExitCheckFailed;
  }
  const pavgen::ExpansionCase c = pavgen::classify(word, pattern);
  std::cout << "k: " << c.k << "\n"
            << "suffix-class: " << pavgen::to_string(c.suffix_class) << "\n"
            << "underground: " << (c.underground ? "true" : "false") << "\n"
            << "forbidden-occurrences: none\n"
            << "rule-family: " << rule_family(c) << "\n";
  if (c.suffix_class == pavgen::SuffixClass::NegRise) {
    const pavgen::NegRiseShape shape = pavgen::neg_rise_shape(word, pattern);
    std::cout << "shape: mu=" << display(shape.mu)
              << " eta=" << display(shape.eta) << "\n";
    const pavgen::NegRiseDecomposition d =
        pavgen::decompose_neg_rise(word, pattern);
    const char* variant = "?";
    switch (d.variant) {
      case pavgen::NegRiseDecomposition::Variant::NoPeak:
        variant = "no-peak";
        break;
      case pavgen::NegRiseDecomposition::Variant::PeakShift:
        variant = "peak-shift";
        break;
      case pavgen::NegRiseDecomposition::Variant::BlockMirror:
        variant = "block-mirror";
        break;
      case pavgen::NegRiseDecomposition::Variant::BlockMirrorDropPeak:
        variant = "block-mirror-drop-peak";
        break;
    }
    std::cout << "underground-variant: " << variant;
    if (!d.nu_blocks.empty()) {
      std::cout << " (" << d.nu_blocks.size() << " blocks)";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_tree(int j, int n_max, const std::string& format,
             const std::string& output) {
  pavgen::PatternParam pattern(j);
  OutputTarget target(output);
  pavgen::export_tree(pattern, n_max,
                      format == "jsonl" ? pavgen::TreeFormat::Jsonl
                                        : pavgen::TreeFormat::Dot,
                      target.stream());
  return kExitOk;
}

int cmd_render(const std::string& text) {
  const pavgen::Word word(text);
  std::cout << pavgen::render_ascii(word) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pavgen: exhaustive generation of binary words with no more 0s than 1s "
      "avoiding the factor (10)^j 1"};
  app.require_subcommand(1);

  int j = 1;
  int n = 0;
  int prop_len = 0;
  std::string format;
  std::string output;
  std::string traversal = "dfs";
  std::string word_text;

  CLI::App* generate = app.add_subcommand(
      "generate", "emit every avoiding word with exactly n 1s, one per line");
  generate->add_option("-j,--pattern-j", j, "pattern parameter j (>= 1)")
      ->required();
  generate->add_option("-n,--ones", n, "number of 1s")->required();
  generate->add_option("--format", format, "text (default) or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  generate->add_option("--output", output, "write to a file instead of stdout");
  generate->add_option("--traversal", traversal, "dfs (default) or bfs")
      ->check(CLI::IsMember({"dfs", "bfs"}));

  CLI::App* count = app.add_subcommand(
      "count", "print the number of avoiding words for 0..n 1s");
  count->add_option("-j,--pattern-j", j, "pattern parameter j (>= 1)")
      ->required();
  count->add_option("-n,--ones", n, "largest number of 1s")->required();
  count->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify",
      "check the generator against brute force, parent uniqueness, and the "
      "swap properties");
  verify->add_option("-j,--pattern-j", j, "pattern parameter j (>= 1)")
      ->required();
  verify->add_option("-n,--ones", n, "largest number of 1s to check")
      ->required();
  verify->add_option("--prop-len", prop_len,
                     "max word length for the swap property sweep "
                     "(default min(2n, 14))");
  verify->add_option("--format", format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* classify = app.add_subcommand(
      "classify", "describe how the expansion rules treat one word");
  classify->add_option("word", word_text, "binary word ('' for the empty word)")
      ->required();
  classify->add_option("-j,--pattern-j", j, "pattern parameter j (>= 1)")
      ->required();

  CLI::App* tree = app.add_subcommand(
      "tree", "export the generation tree up to n 1s");
  tree->add_option("-j,--pattern-j", j, "pattern parameter j (>= 1)")
      ->required();
  tree->add_option("-n,--ones", n, "largest number of 1s")->required();
  tree->add_option("--format", format, "dot (default) or jsonl")
      ->check(CLI::IsMember({"dot", "jsonl"}));
  tree->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* render = app.add_subcommand(
      "render", "draw a word as an ASCII path");
  render->add_option("word", word_text, "binary word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      return cmd_generate(j, n, format, output, traversal);
    }
    if (count->parsed()) return cmd_count(j, n, output);
    if (verify->parsed()) return cmd_verify(j, n, prop_len, format, output);
    if (classify->parsed()) return cmd_classify(word_text, j);
    if (tree->parsed()) return cmd_tree(j, n, format, output);
    if (render->parsed()) return cmd_render(word_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
