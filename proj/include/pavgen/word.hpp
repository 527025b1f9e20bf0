#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pavgen {

/// One step of a lattice path: bit '1' rises by (1,1), bit '0' falls by (1,-1).
enum class Step : char { Rise = '1', Fall = '0' };

/// A binary word viewed as a lattice path starting at ordinate 0.
///
/// Immutable value type. The canonical text form is the '0'/'1' bit string;
/// all operations return new words.
class Word {
 public:
  Word() = default;

  /// Builds a word from a '0'/'1' string. Throws std::invalid_argument
  /// naming the first offending position on any other character.
  explicit Word(std::string_view bits);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Step step(std::size_t i) const { return static_cast<Step>(bits_[i]); }

  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }

  Word prefix(std::size_t count) const;
  Word suffix(std::size_t start) const;
  bool starts_with(const Word& head) const;
  bool ends_with(const Word& tail) const;

  Word operator+(const Word& rhs) const;
  Word& operator+=(const Word& rhs);

  auto operator<=>(const Word&) const = default;

 private:
  struct Unchecked {};
  Word(Unchecked, std::string bits) : bits_(std::move(bits)) {}

  std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word parse_word(std::string_view text);

/// `count` copies of one step.
Word run(Step s, std::size_t count);
/// (10)^count — a run of `count` peaks.
Word peak_run(std::size_t count);
/// (01)^count — a run of `count` valleys.
Word valley_run(std::size_t count);

/// Ordinate after each step (starting ordinate 0 is implicit).
struct OrdinateProfile {
  std::vector<int> prefix_heights;
  int endpoint = 0;
};
OrdinateProfile ordinate_profile(const Word& w);

/// Ordinates at every lattice point, size() + 1 entries, first is 0.
std::vector<int> height_points(const Word& w);

/// ones - zeros; the ordinate of the path's endpoint.
int endpoint_ordinate(const Word& w);

/// All start indices of `factor` in `w`, ascending, overlaps included.
/// Throws std::invalid_argument if factor is empty.
std::vector<std::size_t> occurrences(const Word& w, const Word& factor);
bool contains_factor(const Word& w, const Word& factor);

/// Begins and ends at ordinate 0, strictly above the axis in between.
bool is_primitive(const Word& w);
/// Begins at ordinate 0 and never goes below the axis.
bool is_positive(const Word& w);
/// Begins and ends at ordinate 0 and never goes above the axis.
bool is_negative(const Word& w);
/// Shape test for a factor read at ordinate -1: begins and ends there and
/// never rises above it. Identical to is_negative in relative coordinates.
bool is_strongly_negative(const Word& w);
/// Ends with a nonempty negative suffix: some split w = u v where v returns
/// to u's final ordinate and never rises above it.
bool is_underground(const Word& w);

/// Rise/fall swap of the whole word; an involution.
Word complement(const Word& w);

/// Splits w into (prefix, suffix) where suffix is the shortest suffix that
/// starts and ends at w's final ordinate and stays strictly above it in
/// between. Throws std::invalid_argument if w is empty or ends with a rise
/// (no such suffix exists).
std::pair<Word, Word> rightmost_primitive_suffix(const Word& w);

/// Splits w at every return to ordinate 0. Every factor but the last begins
/// and ends on the axis without touching it in between; the last may end at
/// any ordinate. Concatenation restores w.
std::vector<Word> factorize(const Word& w);

/// Multi-line '/' and '\' mountain diagram. Diagnostic only.
std::string render_ascii(const Word& w);

/// The forbidden-factor family (10)^j 1 for a fixed j >= 1.
class PatternParam {
 public:
  explicit PatternParam(int j);

  int j() const { return j_; }
  /// (10)^j 1, length 2j+1.
  const Word& forbidden() const { return forbidden_; }
  /// 00 (10)^j 0 — the factor whose presence in a primitive path makes the
  /// path's complement contain the forbidden factor.
  const Word& auxiliary() const { return auxiliary_; }

 private:
  int j_;
  Word forbidden_;
  Word auxiliary_;
};

bool contains_forbidden(const Word& w, const PatternParam& p);

}  // namespace pavgen
