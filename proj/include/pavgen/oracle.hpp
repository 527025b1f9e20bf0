#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pavgen/generator.hpp"
#include "pavgen/word.hpp"

namespace pavgen {

// Guards keep the exhaustive sweeps in desk-scale territory.
inline constexpr int kOracleOnesGuard = 12;
inline constexpr int kPropositionLengthGuard = 18;

/// Ground truth by filtration: every binary word with exactly n rises and at
/// most n falls that avoids the forbidden factor. Independent of the
/// constructive rules; shares only the basic word type.
std::set<Word> oracle_enumerate(const PatternParam& p, int n,
                                int guard = kOracleOnesGuard);

/// All primitive words of length <= max_len (any pattern).
std::vector<Word> primitive_paths(int max_len);

/// Outcome of comparing the generator against the brute-force set.
struct OracleReport {
  int j = 0;
  int n = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t generated_count = 0;
  std::vector<Word> missing;    // in the oracle set only
  std::vector<Word> extra;      // generated but not in the oracle set
  std::vector<Word> duplicate;  // generated more than once

  bool pass() const {
    return missing.empty() && extra.empty() && duplicate.empty() &&
           oracle_count == generated_count;
  }
  std::string text() const;
  nlohmann::json to_json() const;
};

OracleReport check_equivalence(const PatternParam& p, int n,
                               int guard = kOracleOnesGuard);

struct ParentCollision {
  Word word;
  std::vector<ParentEdge> origins;
};

struct ParentUniquenessReport {
  int j = 0;
  int n = 0;
  std::uint64_t node_count = 0;
  std::vector<ParentCollision> collisions;

  bool pass() const { return collisions.empty(); }
  std::string text() const;
  nlohmann::json to_json() const;
};

/// Walks the whole tree up to n rises and flags every word reached through
/// more than one (parent, h, branch) edge.
ParentUniquenessReport check_parent_uniqueness(const PatternParam& p, int n,
                                               int guard = kOracleOnesGuard);

/// Exhaustive checks of the three structural properties behind the
/// construction, over all primitive words up to max_len:
///  1. a primitive avoiding word's complement contains the forbidden factor
///     exactly when the word contains the auxiliary factor 00 (10)^j 0;
///  2. swap_forbidden output avoids the factor while its complement
///     contains it, and swap_forbidden_inverse returns the input;
///  3. every primitive word containing the factor whose complement avoids it
///     is swap_forbidden of exactly the word swap_forbidden_inverse yields.
struct PropositionReport {
  int j = 0;
  int max_len = 0;
  std::uint64_t aux_checked = 0;
  std::vector<Word> aux_failures;
  std::uint64_t swap_checked = 0;
  std::vector<Word> swap_failures;
  std::uint64_t inverse_checked = 0;
  std::vector<Word> inverse_failures;
  std::uint64_t total_swaps = 0;
  std::uint64_t cascades = 0;  // swap runs whose exchange count differed
                               // from the initial occurrence count

  bool pass() const {
    return aux_failures.empty() && swap_failures.empty() &&
           inverse_failures.empty();
  }
  std::string text() const;
  nlohmann::json to_json() const;
};

PropositionReport check_propositions(const PatternParam& p, int max_len,
                                     int guard = kPropositionLengthGuard);

}  // namespace pavgen
