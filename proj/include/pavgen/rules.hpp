#pragma once

#include <string>
#include <vector>

#include "pavgen/word.hpp"

namespace pavgen {

/// Suffix shape that selects the expansion rule family.
enum class SuffixClass {
  /// No special suffix.
  Plain,
  /// Ends with (10)^j, a run of j peaks. Appending a rise there would
  /// complete the forbidden factor, so new steps are inserted to its left.
  TrailingPeaks,
  /// Ends on the axis with (10)^{j-1} 1, rising back from below; the word is
  /// underground with shape mu 0 eta 1 (01)^{j-1}. The h = 1 underground
  /// child needs a dedicated construction.
  NegRise,
};

std::string to_string(SuffixClass c);

struct ExpansionCase {
  int k = 0;                                  // endpoint ordinate
  SuffixClass suffix_class = SuffixClass::Plain;
  bool underground = false;
};

/// Classifies a forbidden-factor-avoiding word. Throws std::logic_error if
/// the word contains the forbidden factor or has more falls than rises.
ExpansionCase classify(const Word& w, const PatternParam& p);

struct BranchTag {
  enum class Kind { ToOrdinate, ToZero, Underground };
  Kind kind = Kind::ToOrdinate;
  int ordinate = 0;  // target ordinate, meaningful for ToOrdinate only

  std::string label() const;
  friend bool operator==(const BranchTag&, const BranchTag&) = default;
};

struct Child {
  Word word;
  BranchTag tag;
};

/// One application of a constructive rule: all children of `parent` with
/// `h` extra rises. Child order is ToOrdinate by descending target, then
/// ToZero, then Underground.
struct Expansion {
  Word parent;
  int h = 0;
  std::vector<Child> children;
};

/// Dispatches on classify(w) to the matching rule family below. Every child
/// avoids the forbidden factor and has exactly h more rises than w.
Expansion expand(const Word& w, int h, const PatternParam& p);

// Rule families. Each expects 1 <= h <= j and the stated classification;
// violations throw std::invalid_argument (h) or std::logic_error (shape).
Expansion expand_plain_k0(const Word& w, int h, const PatternParam& p);
Expansion expand_plain_k1(const Word& w, int h, const PatternParam& p);
Expansion expand_plain_kge2(const Word& w, int h, const PatternParam& p);
Expansion expand_peaks_k0(const Word& w, int h, const PatternParam& p);
Expansion expand_peaks_k1(const Word& w, int h, const PatternParam& p);
Expansion expand_peaks_kge2(const Word& w, int h, const PatternParam& p);
Expansion expand_neg_rise(const Word& w, int h, const PatternParam& p);

/// Decomposition of a NegRise word w = mu 0 eta 1 (01)^{j-1}: mu ends on the
/// axis at the last return to 0 before the trailing block, eta is empty or
/// strongly negative.
struct NegRiseShape {
  Word mu;
  Word eta;
};
NegRiseShape neg_rise_shape(const Word& w, const PatternParam& p);

/// How the h = 1 underground child of a NegRise word is built.
struct NegRiseDecomposition {
  enum class Variant {
    /// mu does not end with a peak: the peak run moves between mu and the
    /// dip 0 eta 1.
    NoPeak,
    /// mu = mu' 10: the trailing peak shifts past the dip. Covers both
    /// nonempty eta and the empty-eta words where no block suffix exists.
    PeakShift,
    /// eta empty and w = head nu_1 ... nu_k (maximal k): every block is
    /// mirrored in place.
    BlockMirror,
    /// Same, but head itself ends with a peak which is absorbed into the
    /// first mirrored block.
    BlockMirrorDropPeak,
  };

  Variant variant = Variant::NoPeak;
  Word head;                    // mu, mu', or the block prefix
  Word tail;                    // eta (NoPeak/PeakShift) or lambda (blocks)
  std::vector<Word> nu_blocks;  // block variants only, leftmost first

  /// Rebuilds the decomposed word; always equals the input.
  Word reassemble(const PatternParam& p) const;
};

NegRiseDecomposition decompose_neg_rise(const Word& w, const PatternParam& p);

/// The h = 1 underground child of a NegRise word: underground, avoids the
/// forbidden factor, one extra rise.
Word neg_rise_underground(const Word& w, const PatternParam& p);

/// Underground child derived from a ToZero child of a k >= 2 expansion:
/// mirrors the rightmost primitive suffix, repairing the mirror with
/// swap_forbidden when the plain complement would contain the factor.
Word underground_from_zero(const Word& to_zero_child, const PatternParam& p);

struct SwapStats {
  int initial_occurrences = 0;
  int swaps = 0;
  bool cascaded() const { return swaps != initial_occurrences; }
};

/// Removes every forbidden factor from v (the complement of a primitive
/// factor-avoiding word) by exchanging the factor's peak run with a shorter
/// peak run at the rightmost same-ordinate point to its left that is entered
/// by two falls. Leftmost occurrence first, rescanning after each exchange.
/// The result avoids the forbidden factor while its complement contains it.
Word swap_forbidden(const Word& v, const PatternParam& p,
                    SwapStats* stats = nullptr);

/// Exact inverse of swap_forbidden on its image: moves each displaced peak
/// run back to the leftmost same-ordinate point to its right that is left by
/// two rises.
Word swap_forbidden_inverse(const Word& v, const PatternParam& p,
                            SwapStats* stats = nullptr);

}  // namespace pavgen
