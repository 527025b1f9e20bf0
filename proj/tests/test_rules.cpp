#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pavgen/oracle.hpp"
#include "pavgen/rules.hpp"
#include "pavgen/word.hpp"

using namespace pavgen;

namespace {

std::set<std::string> child_bits(const Expansion& e) {
  std::set<std::string> out;
  for (const Child& c : e.children) out.insert(c.word.bits());
  return out;
}

/// Every factor-avoiding word with at most max_ones rises, via the
/// brute-force oracle so the sweep is independent of the rules under test.
std::vector<Word> avoiding_words(const PatternParam& p, int max_ones) {
  std::vector<Word> out;
  for (int n = 0; n <= max_ones; ++n) {
    for (const Word& w : oracle_enumerate(p, n)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(Word(""), PatternParam(2)).k == 0);
  CHECK(classify(Word(""), PatternParam(2)).suffix_class == SuffixClass::Plain);

  const ExpansionCase rho = classify(Word("10"), PatternParam(1));
  CHECK(rho.k == 0);
  CHECK(rho.suffix_class == SuffixClass::TrailingPeaks);

  const ExpansionCase neg = classify(Word("01"), PatternParam(1));
  CHECK(neg.k == 0);
  CHECK(neg.suffix_class == SuffixClass::NegRise);
  CHECK(neg.underground);

  const ExpansionCase k1 = classify(Word("1"), PatternParam(2));
  CHECK(k1.k == 1);
  CHECK(k1.suffix_class == SuffixClass::Plain);

  // Ends with a rise at ordinate 0, so it rises back from below.
  CHECK(classify(Word("1001"), PatternParam(1)).suffix_class ==
        SuffixClass::NegRise);
  // Trailing peak run wins at any ordinate.
  CHECK(classify(Word("0110"), PatternParam(1)).suffix_class ==
        SuffixClass::TrailingPeaks);
  CHECK(classify(Word("1110"), PatternParam(1)).suffix_class ==
        SuffixClass::TrailingPeaks);
  CHECK(classify(Word("1110"), PatternParam(1)).k == 2);
  // For j=2 the same word is plain: the special suffixes are longer.
  CHECK(classify(Word("01"), PatternParam(2)).suffix_class ==
        SuffixClass::Plain);
  CHECK(classify(Word("0101"), PatternParam(2)).suffix_class ==
        SuffixClass::NegRise);

  CHECK_THROWS_AS(classify(Word("101"), PatternParam(1)), std::logic_error);
  CHECK_THROWS_AS(classify(Word("0"), PatternParam(1)), std::logic_error);
}

TEST_CASE("classification is exclusive and matches the string suffixes") {
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    const Word rho = peak_run(static_cast<std::size_t>(j));
    const Word tail = peak_run(static_cast<std::size_t>(j - 1)) + run(Step::Rise, 1);
    for (const Word& w : avoiding_words(p, 6)) {
      const ExpansionCase c = classify(w, p);
      CHECK(c.k == endpoint_ordinate(w));
      CHECK(c.underground == is_underground(w));
      if (c.suffix_class == SuffixClass::NegRise) {
        CHECK(c.k == 0);
        CHECK(w.ends_with(tail));
        CHECK(c.underground);
      } else if (c.suffix_class == SuffixClass::TrailingPeaks) {
        CHECK(w.ends_with(rho));
      } else {
        CHECK_FALSE(w.ends_with(rho));
        const bool neg_rise_shaped = c.k == 0 && w.ends_with(tail);
        CHECK_FALSE(neg_rise_shaped);
      }
    }
  }
}

TEST_CASE("plain expansion at ordinate 0") {
  const PatternParam p2(2);
  CHECK(child_bits(expand_plain_k0(Word(""), 1, p2)) ==
        std::set<std::string>{"1", "10", "01"});
  CHECK(child_bits(expand_plain_k0(Word(""), 2, p2)) ==
        std::set<std::string>{"110", "1100", "0011"});
  CHECK(child_bits(expand_plain_k0(Word("1100"), 1, p2)) ==
        std::set<std::string>{"11001", "110010", "110001"});

  const Expansion e = expand_plain_k0(Word(""), 1, p2);
  CHECK(e.children[0].tag.kind == BranchTag::Kind::ToOrdinate);
  CHECK(e.children[0].tag.ordinate == 1);
  CHECK(e.children[1].tag.kind == BranchTag::Kind::ToZero);
  CHECK(e.children[2].tag.kind == BranchTag::Kind::Underground);

  CHECK_THROWS_AS(expand_plain_k0(Word(""), 0, p2), std::invalid_argument);
  CHECK_THROWS_AS(expand_plain_k0(Word(""), 3, p2), std::invalid_argument);
  CHECK_THROWS_AS(expand_plain_k0(Word("1"), 1, p2), std::logic_error);
}

TEST_CASE("plain expansion at ordinate 1") {
  CHECK(child_bits(expand_plain_k1(Word("1"), 1, PatternParam(1))) ==
        std::set<std::string>{"11"});
  CHECK(child_bits(expand_plain_k1(Word("1"), 2, PatternParam(2))) ==
        std::set<std::string>{"1110"});
  CHECK(child_bits(expand_plain_k1(Word("10011"), 1, PatternParam(4))) ==
        std::set<std::string>{"100111"});
  // Ordinate 1 is a precondition; 11011 ends at ordinate 3.
  CHECK_THROWS_AS(expand_plain_k1(Word("11011"), 1, PatternParam(4)),
                  std::logic_error);
  CHECK(expand_plain_k1(Word("1"), 1, PatternParam(1)).children[0].tag.ordinate ==
        2);
}

TEST_CASE("plain expansion at ordinate k >= 2") {
  const Expansion e = expand_plain_kge2(Word("11"), 1, PatternParam(1));
  REQUIRE(e.children.size() == 4);
  CHECK(e.children[0].word.bits() == "111");
  CHECK(e.children[0].tag.ordinate == 3);
  CHECK(e.children[1].word.bits() == "11100");
  CHECK(e.children[1].tag.ordinate == 1);
  CHECK(e.children[2].word.bits() == "111000");
  CHECK(e.children[2].tag.kind == BranchTag::Kind::ToZero);
  CHECK(e.children[3].word.bits() == "000111");
  CHECK(e.children[3].tag.kind == BranchTag::Kind::Underground);

  // Arity and rise count are forced: k+2 children, h extra rises each.
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    for (const Word& w : avoiding_words(p, 6)) {
      const int k = endpoint_ordinate(w);
      if (k < 2 || classify(w, p).suffix_class != SuffixClass::Plain) continue;
      for (int h = 1; h <= j; ++h) {
        const Expansion exp = expand_plain_kge2(w, h, p);
        CHECK(exp.children.size() == static_cast<std::size_t>(k) + 2);
        for (const Child& c : exp.children) {
          CHECK(c.word.ones() == w.ones() + static_cast<std::size_t>(h));
        }
      }
    }
  }
}

TEST_CASE("trailing-peaks expansion at ordinate 0") {
  CHECK(child_bits(expand_peaks_k0(Word("10"), 1, PatternParam(1))) ==
        std::set<std::string>{"110", "1100", "0011"});
  CHECK(child_bits(expand_peaks_k0(Word("1010"), 1, PatternParam(2))) ==
        std::set<std::string>{"11010", "110100", "001011"});
  CHECK_THROWS_AS(expand_peaks_k0(Word("1100"), 1, PatternParam(1)),
                  std::logic_error);
}

TEST_CASE("trailing-peaks expansion at ordinate 1") {
  const Expansion e = expand_peaks_k1(Word("110"), 1, PatternParam(1));
  REQUIRE(e.children.size() == 1);
  CHECK(e.children[0].word.bits() == "1110");
  CHECK(e.children[0].tag.ordinate == 2);
  CHECK(endpoint_ordinate(e.children[0].word) == 2);
}

TEST_CASE("trailing-peaks expansion at ordinate k >= 2") {
  const Expansion e = expand_peaks_kge2(Word("1110"), 1, PatternParam(1));
  REQUIRE(e.children.size() == 4);
  CHECK(e.children[0].word.bits() == "11110");
  CHECK(e.children[1].word.bits() == "1110010");
  CHECK(e.children[1].tag.ordinate == 1);
  CHECK(e.children[2].word.bits() == "11100100");
  // The plain mirror of the rightmost primitive suffix would contain the
  // factor; the swap repairs it.
  CHECK(e.children[3].word.bits() == "00100111");
  CHECK_FALSE(contains_forbidden(e.children[3].word, PatternParam(1)));
  CHECK(is_underground(e.children[3].word));
}

TEST_CASE("neg-rise shape extraction") {
  const PatternParam p1(1);
  const NegRiseShape s1 = neg_rise_shape(Word("01"), p1);
  CHECK(s1.mu.empty());
  CHECK(s1.eta.empty());

  const NegRiseShape s2 = neg_rise_shape(Word("1001"), p1);
  CHECK(s2.mu.bits() == "10");
  CHECK(s2.eta.empty());

  const NegRiseShape s3 = neg_rise_shape(Word("000111"), p1);
  CHECK(s3.mu.empty());
  CHECK(s3.eta.bits() == "0011");
  CHECK(is_strongly_negative(s3.eta));

  const NegRiseShape s4 = neg_rise_shape(Word("0101"), PatternParam(2));
  CHECK(s4.mu.empty());
  CHECK(s4.eta.empty());

  CHECK_THROWS_AS(neg_rise_shape(Word("10"), p1), std::logic_error);
}

TEST_CASE("neg-rise shape reassembles over the oracle sweep") {
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    const Word dip_tail =
        run(Step::Rise, 1) + valley_run(static_cast<std::size_t>(j - 1));
    for (const Word& w : avoiding_words(p, 6)) {
      if (classify(w, p).suffix_class != SuffixClass::NegRise) continue;
      const NegRiseShape shape = neg_rise_shape(w, p);
      CHECK(shape.mu + run(Step::Fall, 1) + shape.eta + dip_tail == w);
      CHECK(endpoint_ordinate(shape.mu) == 0);
      if (!shape.eta.empty()) CHECK(is_strongly_negative(shape.eta));
      const NegRiseDecomposition d = decompose_neg_rise(w, p);
      CHECK(d.reassemble(p) == w);
    }
  }
}

TEST_CASE("neg-rise underground construction, all variants") {
  const PatternParam p1(1);

  // mu empty: the peak run lands between mu and the dip.
  CHECK(decompose_neg_rise(Word("01"), p1).variant ==
        NegRiseDecomposition::Variant::NoPeak);
  CHECK(neg_rise_underground(Word("01"), p1).bits() == "1001");

  // mu ends with a peak, eta empty, no block suffix: shifted peak run.
  CHECK(decompose_neg_rise(Word("1001"), p1).variant ==
        NegRiseDecomposition::Variant::PeakShift);
  CHECK(neg_rise_underground(Word("1001"), p1).bits() == "011001");

  // eta nonempty keeps the dip in place.
  CHECK(neg_rise_underground(Word("000111"), p1).bits() == "10000111");

  // Block suffix with a plain head.
  const NegRiseDecomposition block = decompose_neg_rise(Word("011001"), p1);
  CHECK(block.variant == NegRiseDecomposition::Variant::BlockMirror);
  REQUIRE(block.nu_blocks.size() == 2);
  CHECK(block.head.empty());
  CHECK(neg_rise_underground(Word("011001"), p1).bits() == "10011001");

  // Block suffix whose head ends with a peak.
  const NegRiseDecomposition drop = decompose_neg_rise(Word("10011001"), p1);
  CHECK(drop.variant == NegRiseDecomposition::Variant::BlockMirrorDropPeak);
  CHECK(drop.head.empty());
  REQUIRE(drop.nu_blocks.size() == 2);
  CHECK(neg_rise_underground(Word("10011001"), p1).bits() == "0110011001");

  // A peak-shift case with nonempty eta for j=2.
  const PatternParam p2(2);
  const Word w2("10" "0" "0011" "1" "01");  // mu=10, eta=0011, dip, valley
  REQUIRE(classify(w2, p2).suffix_class == SuffixClass::NegRise);
  const NegRiseDecomposition d2 = decompose_neg_rise(w2, p2);
  CHECK(d2.variant == NegRiseDecomposition::Variant::PeakShift);
  CHECK(d2.head.empty());
  CHECK(d2.tail.bits() == "0011");
  CHECK(neg_rise_underground(w2, p2).bits() == "0" "0011" "1" "1010" "01");
}

TEST_CASE("neg-rise underground children avoid the factor and dip below") {
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    for (const Word& w : avoiding_words(p, 6)) {
      if (classify(w, p).suffix_class != SuffixClass::NegRise) continue;
      const Word u = neg_rise_underground(w, p);
      CHECK_FALSE(contains_forbidden(u, p));
      CHECK(is_underground(u));
      CHECK(u.ones() == w.ones() + 1);
      CHECK(endpoint_ordinate(u) == 0);
    }
  }
}

TEST_CASE("underground from a to-zero child") {
  const PatternParam p1(1);
  CHECK(underground_from_zero(Word("111000"), p1).bits() == "000111");
  CHECK(underground_from_zero(Word("10111000"), PatternParam(2)).bits() ==
        "10000111");
  CHECK(underground_from_zero(Word("11100100"), p1).bits() == "00100111");
  CHECK_THROWS_AS(underground_from_zero(Word("1001"), p1),
                  std::invalid_argument);
}

TEST_CASE("swap removes the factor and the inverse restores the word") {
  const PatternParam p1(1);
  SwapStats stats;
  const Word swapped = swap_forbidden(Word("00011011"), p1, &stats);
  CHECK(swapped.bits() == "00100111");
  CHECK(stats.swaps == 1);
  CHECK(stats.initial_occurrences == 1);
  CHECK_FALSE(stats.cascaded());
  CHECK(swap_forbidden_inverse(swapped, p1).bits() == "00011011");

  // Exchange with a nonempty shorter run (not a pure insertion).
  const PatternParam p2(2);
  const Word v("001001101011");
  const Word moved = swap_forbidden(v, p2);
  CHECK(moved.bits() == "001010011011");
  CHECK_FALSE(contains_forbidden(moved, p2));
  CHECK(contains_forbidden(complement(moved), p2));
  CHECK(swap_forbidden_inverse(moved, p2) == v);

  // No occurrence: identity.
  CHECK(swap_forbidden(Word("0011"), p1) == Word("0011"));
  CHECK(swap_forbidden_inverse(Word("0011"), p1) == Word("0011"));
}

TEST_CASE("swap round-trips over every applicable word") {
  for (int j : {1, 2}) {
    const PatternParam p(j);
    int checked = 0;
    for (const Word& mu : primitive_paths(12)) {
      if (contains_forbidden(mu, p)) continue;
      const Word v = complement(mu);
      if (!contains_forbidden(v, p)) continue;
      ++checked;
      const Word swapped = swap_forbidden(v, p);
      CHECK_FALSE(contains_forbidden(swapped, p));
      CHECK(contains_forbidden(complement(swapped), p));
      CHECK(swap_forbidden_inverse(swapped, p) == v);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("expansion dispatch") {
  const PatternParam p1(1);
  CHECK(child_bits(expand(Word(""), 1, p1)) ==
        std::set<std::string>{"1", "10", "01"});

  // The whole second level for j=1.
  std::set<std::string> level2;
  for (const std::string parent : {"1", "10", "01"}) {
    for (const Child& c : expand(Word(parent), 1, p1).children) {
      level2.insert(c.word.bits());
    }
  }
  CHECK(level2 == std::set<std::string>{"11", "110", "1100", "0011", "011",
                                        "0110", "1001"});

  // The h >= 2 rules coincide for plain and neg-rise words.
  CHECK(expand(Word("01"), 2, PatternParam(2)).children[2].word.bits() ==
        "010011");

  CHECK_THROWS_AS(expand(Word("101"), 1, p1), std::logic_error);
  CHECK_THROWS_AS(expand(Word("1"), 2, p1), std::invalid_argument);
}

TEST_CASE("every child avoids the factor, adds h rises, and the child count "
          "depends only on the endpoint ordinate") {
  // Parents up to 9 rises cover every expansion a level-10 run performs.
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    for (const Word& w : avoiding_words(p, 9)) {
      const int k = endpoint_ordinate(w);
      const std::size_t arity =
          k == 0 ? 3 : (k == 1 ? 1 : static_cast<std::size_t>(k) + 2);
      for (int h = 1; h <= j; ++h) {
        const Expansion e = expand(w, h, p);
        CHECK(e.children.size() == arity);
        for (const Child& c : e.children) {
          CHECK_FALSE(contains_forbidden(c.word, p));
          CHECK(c.word.ones() == w.ones() + static_cast<std::size_t>(h));
          CHECK(c.word.zeros() <= c.word.ones());
        }
      }
    }
  }
}

TEST_CASE("branch tags tell the truth") {
  for (int j : {1, 2, 3}) {
    const PatternParam p(j);
    for (const Word& w : avoiding_words(p, 6)) {
      for (int h = 1; h <= j; ++h) {
        for (const Child& c : expand(w, h, p).children) {
          switch (c.tag.kind) {
            case BranchTag::Kind::ToOrdinate:
              CHECK(endpoint_ordinate(c.word) == c.tag.ordinate);
              break;
            case BranchTag::Kind::ToZero:
              CHECK(endpoint_ordinate(c.word) == 0);
              break;
            case BranchTag::Kind::Underground:
              CHECK(endpoint_ordinate(c.word) == 0);
              CHECK(is_underground(c.word));
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("the underground child mirrors the rightmost primitive suffix of "
          "the to-zero child at ordinate 0") {
  for (int j : {1, 2}) {
    const PatternParam p(j);
    for (const Word& w : avoiding_words(p, 6)) {
      const ExpansionCase c = classify(w, p);
      if (c.k != 0 || c.suffix_class == SuffixClass::NegRise) continue;
      for (int h = 1; h <= j; ++h) {
        const Expansion e = expand(w, h, p);
        REQUIRE(e.children.size() == 3);
        const auto [head, prim] =
            rightmost_primitive_suffix(e.children[1].word);
        CHECK(head + complement(prim) == e.children[2].word);
      }
    }
  }
}
