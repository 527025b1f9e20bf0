#include "pavgen/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pavgen/rules.hpp"

namespace pavgen {

namespace {

constexpr std::size_t kReportListCap = 50;

void append_word_list(std::ostream& os, const char* name,
                      const std::vector<Word>& words) {
  os << "  " << name << ": " << words.size() << "\n";
  const std::size_t shown = std::min(words.size(), kReportListCap);
  for (std::size_t i = 0; i < shown; ++i) {
    os << "    " << (words[i].empty() ? std::string("ε") : words[i].bits())
       << "\n";
  }
  if (shown < words.size()) {
    os << "    ... (" << words.size() - shown << " more)\n";
  }
}

nlohmann::json words_to_json(const std::vector<Word>& words) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Word& w : words) arr.push_back(w.bits());
  return arr;
}

std::vector<Word> sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace

std::set<Word> oracle_enumerate(const PatternParam& p, int n, int guard) {
  if (n < 0) {
    throw std::invalid_argument("oracle_enumerate: n must be >= 0");
  }
  if (n > guard) {
    std::ostringstream msg;
    msg << "oracle_enumerate: n=" << n << " exceeds the guard of " << guard;
    throw std::runtime_error(msg.str());
  }
  const std::string& pat = p.forbidden().bits();
  std::set<Word> out;
  for (int len = n; len <= 2 * n; ++len) {
    std::string s = std::string(static_cast<std::size_t>(len - n), '0') +
                    std::string(static_cast<std::size_t>(n), '1');
    do {
      if (s.find(pat) == std::string::npos) out.emplace(s);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return out;
}

std::vector<Word> primitive_paths(int max_len) {
  std::vector<Word> out;
  std::string buf;
  for (int len = 2; len <= max_len; len += 2) {
    buf.assign(static_cast<std::size_t>(len), '0');
    // Interior ordinates stay >= 1, the final one returns to 0.
    auto rec = [&](auto&& self, int pos, int height) -> void {
      if (pos == len) {
        out.emplace_back(buf);
        return;
      }
      const bool last = pos + 1 == len;
      for (const char c : {'1', '0'}) {
        const int next = height + (c == '1' ? 1 : -1);
        if (last ? next != 0 : (next < 1 || next > len - pos - 1)) continue;
        buf[static_cast<std::size_t>(pos)] = c;
        self(self, pos + 1, next);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

OracleReport check_equivalence(const PatternParam& p, int n, int guard) {
  const std::set<Word> expected = oracle_enumerate(p, n, guard);
  const std::vector<Word> generated = generate_words(p, n);

  OracleReport report;
  report.j = p.j();
  report.n = n;
  report.oracle_count = expected.size();
  report.generated_count = generated.size();

  std::vector<Word> sorted = generated;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) report.duplicate.push_back(sorted[i]);
  }
  report.duplicate = sorted_unique(std::move(report.duplicate));

  const std::set<Word> generated_set(sorted.begin(), sorted.end());
  std::set_difference(expected.begin(), expected.end(), generated_set.begin(),
                      generated_set.end(), std::back_inserter(report.missing));
  std::set_difference(generated_set.begin(), generated_set.end(),
                      expected.begin(), expected.end(),
                      std::back_inserter(report.extra));
  return report;
}

std::string OracleReport::text() const {
  std::ostringstream os;
  os << "equivalence j=" << j << " n=" << n << ": oracle=" << oracle_count
     << " generated=" << generated_count << " -> "
     << (pass() ? "PASS" : "FAIL") << "\n";
  if (!pass()) {
    append_word_list(os, "missing", missing);
    append_word_list(os, "extra", extra);
    append_word_list(os, "duplicate", duplicate);
  }
  return os.str();
}

nlohmann::json OracleReport::to_json() const {
  return {{"j", j},
          {"n", n},
          {"oracle_count", oracle_count},
          {"generated_count", generated_count},
          {"missing", words_to_json(missing)},
          {"extra", words_to_json(extra)},
          {"duplicate", words_to_json(duplicate)},
          {"pass", pass()}};
}

ParentUniquenessReport check_parent_uniqueness(const PatternParam& p, int n,
                                               int guard) {
  if (n > guard) {
    std::ostringstream msg;
    msg << "check_parent_uniqueness: n=" << n << " exceeds the guard of "
        << guard;
    throw std::runtime_error(msg.str());
  }
  ParentUniquenessReport report;
  report.j = p.j();
  report.n = n;
  std::map<Word, std::vector<ParentEdge>> origins;
  generate_all({p, n, Traversal::DepthFirst, true},
               [&](const GenerationNode& node) {
                 ++report.node_count;
                 if (node.parent_edge.has_value()) {
                   origins[node.word].push_back(*node.parent_edge);
                 }
               });
  for (auto& [word, edges] : origins) {
    if (edges.size() > 1) {
      report.collisions.push_back({word, std::move(edges)});
    }
  }
  return report;
}

std::string ParentUniquenessReport::text() const {
  std::ostringstream os;
  os << "parent-uniqueness j=" << j << " n<=" << n
     << ": nodes=" << node_count << " collisions=" << collisions.size()
     << " -> " << (pass() ? "PASS" : "FAIL") << "\n";
  const std::size_t shown = std::min(collisions.size(), kReportListCap);
  for (std::size_t i = 0; i < shown; ++i) {
    os << "    " << collisions[i].word << " from";
    for (const ParentEdge& e : collisions[i].origins) {
      os << " (" << (e.parent.empty() ? std::string("ε") : e.parent.bits())
         << ", h=" << e.h << ", " << e.branch.label() << ")";
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json ParentUniquenessReport::to_json() const {
  nlohmann::json coll = nlohmann::json::array();
  for (const ParentCollision& c : collisions) {
    nlohmann::json origins = nlohmann::json::array();
    for (const ParentEdge& e : c.origins) {
      origins.push_back({{"parent", e.parent.bits()},
                         {"h", e.h},
                         {"branch", e.branch.label()}});
    }
    coll.push_back({{"word", c.word.bits()}, {"origins", origins}});
  }
  return {{"j", j},
          {"n", n},
          {"node_count", node_count},
          {"collisions", coll},
          {"pass", pass()}};
}

PropositionReport check_propositions(const PatternParam& p, int max_len,
                                     int guard) {
  if (max_len > guard) {
    std::ostringstream msg;
    msg << "check_propositions: max_len=" << max_len
        << " exceeds the guard of " << guard;
    throw std::runtime_error(msg.str());
  }
  PropositionReport report;
  report.j = p.j();
  report.max_len = max_len;

  for (const Word& mu : primitive_paths(max_len)) {
    const Word mc = complement(mu);
    const bool mu_has = contains_forbidden(mu, p);
    const bool mc_has = contains_forbidden(mc, p);

    if (!mu_has) {
      ++report.aux_checked;
      if (mc_has != contains_factor(mu, p.auxiliary())) {
        report.aux_failures.push_back(mu);
      }
    }

    if (!mu_has && mc_has) {
      ++report.swap_checked;
      SwapStats stats;
      const Word swapped = swap_forbidden(mc, p, &stats);
      report.total_swaps += static_cast<std::uint64_t>(stats.swaps);
      if (stats.cascaded()) ++report.cascades;
      const bool ok = !contains_forbidden(swapped, p) &&
                      contains_forbidden(complement(swapped), p) &&
                      swap_forbidden_inverse(swapped, p) == mc;
      if (!ok) report.swap_failures.push_back(mu);
    }

    if (mu_has && !mc_has) {
      ++report.inverse_checked;
      bool ok = contains_factor(mc, p.auxiliary());
      if (ok) {
        const Word source = swap_forbidden_inverse(mc, p);
        ok = swap_forbidden(source, p) == mc &&
             !contains_forbidden(complement(source), p);
      }
      if (!ok) report.inverse_failures.push_back(mu);
    }
  }
  return report;
}

std::string PropositionReport::text() const {
  std::ostringstream os;
  os << "propositions j=" << j << " len<=" << max_len << ": aux-biconditional "
     << aux_checked << " checked, swap " << swap_checked
     << " checked, inverse " << inverse_checked << " checked, swaps="
     << total_swaps << " cascades=" << cascades << " -> "
     << (pass() ? "PASS" : "FAIL") << "\n";
  if (!pass()) {
    append_word_list(os, "aux failures", aux_failures);
    append_word_list(os, "swap failures", swap_failures);
    append_word_list(os, "inverse failures", inverse_failures);
  }
  return os.str();
}

nlohmann::json PropositionReport::to_json() const {
  return {{"j", j},
          {"max_len", max_len},
          {"aux_checked", aux_checked},
          {"aux_failures", words_to_json(aux_failures)},
          {"swap_checked", swap_checked},
          {"swap_failures", words_to_json(swap_failures)},
          {"inverse_checked", inverse_checked},
          {"inverse_failures", words_to_json(inverse_failures)},
          {"total_swaps", total_swaps},
          {"cascades", cascades},
          {"pass", pass()}};
}

}  // namespace pavgen
