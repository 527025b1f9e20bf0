#include "pavgen/generator.hpp"

#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace pavgen {

namespace {

int child_cap(const GenerationConfig& config, int ones) {
  return std::min(config.pattern.j(), config.target_ones - ones);
}

void dfs(const GenerationConfig& config, const GenerationNode& node,
         const NodeSink& sink) {
  if (node.ones == config.target_ones) {
    sink(node);
    return;
  }
  if (config.emit_intermediate) sink(node);
  const int cap = child_cap(config, node.ones);
  for (int h = 1; h <= cap; ++h) {
    const Expansion e = expand(node.word, h, config.pattern);
    for (const Child& child : e.children) {
      dfs(config,
          GenerationNode{child.word, endpoint_ordinate(child.word),
                         node.ones + h,
                         ParentEdge{node.word, h, child.tag}},
          sink);
    }
  }
}

void bfs(const GenerationConfig& config, const GenerationNode& root,
         const NodeSink& sink) {
  std::deque<GenerationNode> queue{root};
  while (!queue.empty()) {
    GenerationNode node = std::move(queue.front());
    queue.pop_front();
    if (node.ones == config.target_ones) {
      sink(node);
      continue;
    }
    if (config.emit_intermediate) sink(node);
    const int cap = child_cap(config, node.ones);
    for (int h = 1; h <= cap; ++h) {
      const Expansion e = expand(node.word, h, config.pattern);
      for (const Child& child : e.children) {
        queue.push_back(GenerationNode{child.word,
                                       endpoint_ordinate(child.word),
                                       node.ones + h,
                                       ParentEdge{node.word, h, child.tag}});
      }
    }
  }
}

}  // namespace

void generate_all(const GenerationConfig& config, const NodeSink& sink) {
  if (config.target_ones < 0) {
    throw std::invalid_argument("generate_all: target_ones must be >= 0");
  }
  const GenerationNode root{Word{}, 0, 0, std::nullopt};
  if (config.traversal == Traversal::DepthFirst) {
    dfs(config, root, sink);
  } else {
    bfs(config, root, sink);
  }
}

std::vector<Word> generate_words(const PatternParam& p, int n,
                                 Traversal traversal) {
  std::vector<Word> out;
  generate_all({p, n, traversal, false},
               [&out](const GenerationNode& node) { out.push_back(node.word); });
  return out;
}

std::vector<std::uint64_t> count_by_ones(const PatternParam& p, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("count_by_ones: n_max must be >= 0");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  generate_all({p, n_max, Traversal::DepthFirst, true},
               [&counts](const GenerationNode& node) {
                 ++counts[static_cast<std::size_t>(node.ones)];
               });
  return counts;
}

void export_tree(const PatternParam& p, int n_max, TreeFormat format,
                 std::ostream& out, std::size_t node_guard) {
  const std::vector<std::uint64_t> counts = count_by_ones(p, n_max);
  const std::uint64_t total =
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total > node_guard) {
    std::ostringstream msg;
    msg << "export_tree: " << total << " nodes exceed the guard of "
        << node_guard;
    throw std::runtime_error(msg.str());
  }

  const GenerationConfig config{p, n_max, Traversal::DepthFirst, true};
  if (format == TreeFormat::Jsonl) {
    generate_all(config, [&out](const GenerationNode& node) {
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
      out << record.dump() << '\n';
    });
    return;
  }

  out << "digraph generation_tree {\n  node [shape=box];\n";
  std::unordered_map<std::string, std::size_t> ids;
  generate_all(config, [&out, &ids](const GenerationNode& node) {
    const std::size_t id = ids.size();
    ids.emplace(node.word.bits(), id);
    out << "  n" << id << " [label=\""
        << (node.word.empty() ? std::string("ε") : node.word.bits())
        << "\\n(" << node.label << ")\"];\n";
    if (node.parent_edge.has_value()) {
      out << "  n" << ids.at(node.parent_edge->parent.bits()) << " -> n" << id
          << " [label=\"h=" << node.parent_edge->h << "\"";
      if (node.parent_edge->h >= 2) out << ", style=dashed";
      out << "];\n";
    }
  });
  out << "}\n";
}

}  // namespace pavgen
