#include "pavgen/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pavgen {

namespace {

const Word kRise = run(Step::Rise, 1);
const Word kFall = run(Step::Fall, 1);
const Word kPeak = peak_run(1);

std::size_t ju(const PatternParam& p) { return static_cast<std::size_t>(p.j()); }

void require_h(int h, const PatternParam& p, const char* who) {
  if (h < 1 || h > p.j()) {
    std::ostringstream msg;
    msg << who << ": h must be in [1, " << p.j() << "], got " << h;
    throw std::invalid_argument(msg.str());
  }
}

void require_endpoint(const Word& w, int k, const char* who) {
  if (endpoint_ordinate(w) != k) {
    std::ostringstream msg;
    msg << who << ": word ends at ordinate " << endpoint_ordinate(w)
        << ", expected " << k;
    throw std::logic_error(msg.str());
  }
}

/// (10)^{j-1} 1 — the NegRise string suffix.
Word neg_rise_tail(const PatternParam& p) {
  return peak_run(ju(p) - 1) + kRise;
}

BranchTag to_ordinate(int m) {
  return {BranchTag::Kind::ToOrdinate, m};
}
const BranchTag kToZero{BranchTag::Kind::ToZero, 0};
const BranchTag kUnderground{BranchTag::Kind::Underground, 0};

}  // namespace

std::string to_string(SuffixClass c) {
  switch (c) {
    case SuffixClass::Plain: return "plain";
    case SuffixClass::TrailingPeaks: return "trailing-peaks";
    case SuffixClass::NegRise: return "neg-rise";
  }
  return "?";
}

std::string BranchTag::label() const {
  switch (kind) {
    case Kind::ToOrdinate: {
      std::ostringstream out;
      out << "to_ordinate(" << ordinate << ")";
      return out.str();
    }
    case Kind::ToZero: return "to_zero";
    case Kind::Underground: return "underground";
  }
  return "?";
}

ExpansionCase classify(const Word& w, const PatternParam& p) {
  if (contains_forbidden(w, p)) {
    throw std::logic_error("classify: word contains the forbidden factor");
  }
  const int k = endpoint_ordinate(w);
  if (k < 0) {
    throw std::logic_error("classify: word has more falls than rises");
  }
  SuffixClass cls = SuffixClass::Plain;
  if (k == 0 && w.ends_with(neg_rise_tail(p))) {
    cls = SuffixClass::NegRise;
  } else if (w.ends_with(peak_run(ju(p)))) {
    cls = SuffixClass::TrailingPeaks;
  }
  return {k, cls, is_underground(w)};
}

Expansion expand_plain_k0(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_plain_k0");
  require_endpoint(w, 0, "expand_plain_k0");
  const Word up = w + kRise + peak_run(static_cast<std::size_t>(h - 1));
  const Word zero = up + kFall;
  const Word under =
      w + kFall + valley_run(static_cast<std::size_t>(h - 1)) + kRise;
  return {w, h, {{up, to_ordinate(1)}, {zero, kToZero}, {under, kUnderground}}};
}

Expansion expand_plain_k1(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_plain_k1");
  require_endpoint(w, 1, "expand_plain_k1");
  const Word up = w + kRise + peak_run(static_cast<std::size_t>(h - 1));
  return {w, h, {{up, to_ordinate(2)}}};
}

Expansion expand_plain_kge2(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_plain_kge2");
  const int k = endpoint_ordinate(w);
  if (k < 2) {
    throw std::logic_error("expand_plain_kge2: endpoint ordinate below 2");
  }
  const Word peaks = peak_run(static_cast<std::size_t>(h - 1));
  Expansion e{w, h, {}};
  e.children.push_back({w + kRise + peaks, to_ordinate(k + 1)});
  for (int m = 2; m <= k; ++m) {
    e.children.push_back(
        {w + kRise + run(Step::Fall, static_cast<std::size_t>(m)) + peaks,
         to_ordinate(k + 1 - m)});
  }
  const Word zero =
      w + kRise + run(Step::Fall, static_cast<std::size_t>(k)) + peaks + kFall;
  e.children.push_back({zero, kToZero});
  e.children.push_back({underground_from_zero(zero, p), kUnderground});
  return e;
}

Expansion expand_peaks_k0(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_peaks_k0");
  require_endpoint(w, 0, "expand_peaks_k0");
  const Word trailing = peak_run(ju(p));
  if (!w.ends_with(trailing)) {
    throw std::logic_error("expand_peaks_k0: word does not end with (10)^j");
  }
  const Word head = w.prefix(w.size() - trailing.size());
  const Word peaks = peak_run(static_cast<std::size_t>(h - 1));
  const Word up = head + peaks + kRise + trailing;
  const Word zero = up + kFall;
  const Word under =
      head + peaks + run(Step::Fall, 2) + peak_run(ju(p) - 1) + run(Step::Rise, 2);
  return {w, h, {{up, to_ordinate(1)}, {zero, kToZero}, {under, kUnderground}}};
}

Expansion expand_peaks_k1(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_peaks_k1");
  require_endpoint(w, 1, "expand_peaks_k1");
  const Word trailing = peak_run(ju(p));
  if (!w.ends_with(trailing)) {
    throw std::logic_error("expand_peaks_k1: word does not end with (10)^j");
  }
  const Word head = w.prefix(w.size() - trailing.size());
  const Word up = head + peak_run(static_cast<std::size_t>(h - 1)) + kRise + trailing;
  return {w, h, {{up, to_ordinate(2)}}};
}

Expansion expand_peaks_kge2(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_peaks_kge2");
  const int k = endpoint_ordinate(w);
  if (k < 2) {
    throw std::logic_error("expand_peaks_kge2: endpoint ordinate below 2");
  }
  const Word trailing = peak_run(ju(p));
  if (!w.ends_with(trailing)) {
    throw std::logic_error("expand_peaks_kge2: word does not end with (10)^j");
  }
  const Word head = w.prefix(w.size() - trailing.size());
  const Word peaks = peak_run(static_cast<std::size_t>(h - 1));
  Expansion e{w, h, {}};
  e.children.push_back({head + peaks + kRise + trailing, to_ordinate(k + 1)});
  for (int m = 2; m <= k; ++m) {
    e.children.push_back(
        {head + peaks + kRise + run(Step::Fall, static_cast<std::size_t>(m)) + trailing,
         to_ordinate(k + 1 - m)});
  }
  const Word zero = head + peaks + kRise +
                    run(Step::Fall, static_cast<std::size_t>(k)) + trailing + kFall;
  e.children.push_back({zero, kToZero});
  e.children.push_back({underground_from_zero(zero, p), kUnderground});
  return e;
}

Expansion expand_neg_rise(const Word& w, int h, const PatternParam& p) {
  require_h(h, p, "expand_neg_rise");
  const ExpansionCase c = classify(w, p);
  if (c.suffix_class != SuffixClass::NegRise) {
    throw std::logic_error("expand_neg_rise: word is not in the neg-rise class");
  }
  if (h >= 2) {
    // The plain construction is factor-safe once h >= 2.
    const Word up = w + kRise + peak_run(static_cast<std::size_t>(h - 1));
    const Word zero = up + kFall;
    const Word under =
        w + kFall + valley_run(static_cast<std::size_t>(h - 1)) + kRise;
    return {w, h,
            {{up, to_ordinate(1)}, {zero, kToZero}, {under, kUnderground}}};
  }
  const Word up = w + kRise;
  const Word zero = w + kPeak;
  return {w, h,
          {{up, to_ordinate(1)},
           {zero, kToZero},
           {neg_rise_underground(w, p), kUnderground}}};
}

NegRiseShape neg_rise_shape(const Word& w, const PatternParam& p) {
  const std::size_t tail_len = 2 * ju(p) - 1;
  if (endpoint_ordinate(w) != 0 || w.size() < tail_len ||
      !w.ends_with(neg_rise_tail(p))) {
    throw std::logic_error("neg_rise_shape: word is not in the neg-rise class");
  }
  const Word gamma = w.prefix(w.size() - tail_len);
  const std::vector<int> points = height_points(gamma);
  // gamma ends at -1; mu reaches to its last return to the axis.
  std::size_t z = gamma.size();
  while (points[z] != 0) --z;
  return {gamma.prefix(z), gamma.suffix(z + 1)};
}

Word NegRiseDecomposition::reassemble(const PatternParam& p) const {
  const Word dip_tail = kRise + valley_run(ju(p) - 1);
  switch (variant) {
    case Variant::NoPeak:
      return head + kFall + tail + dip_tail;
    case Variant::PeakShift:
      return head + kPeak + kFall + tail + dip_tail;
    case Variant::BlockMirror:
    case Variant::BlockMirrorDropPeak: {
      Word out = head;
      if (variant == Variant::BlockMirrorDropPeak) out += kPeak;
      for (const Word& block : nu_blocks) out += block;
      return out;
    }
  }
  throw std::logic_error("NegRiseDecomposition::reassemble: bad variant");
}

NegRiseDecomposition decompose_neg_rise(const Word& w, const PatternParam& p) {
  const NegRiseShape shape = neg_rise_shape(w, p);
  NegRiseDecomposition d;
  if (!shape.mu.ends_with(kPeak)) {
    d.variant = NegRiseDecomposition::Variant::NoPeak;
    d.head = shape.mu;
    d.tail = shape.eta;
    return d;
  }
  const Word mu2 = shape.mu.prefix(shape.mu.size() - 2);
  if (!shape.eta.empty()) {
    d.variant = NegRiseDecomposition::Variant::PeakShift;
    d.head = mu2;
    d.tail = shape.eta;
    return d;
  }

  // eta empty: w = mu' 10 (01)^j. Look for the longest block suffix
  //   w = head nu_1 ... nu_k, k >= 2, with
  //   nu_1 = 0 lambda 1 (01)^{j-1} 10, nu_mid = (01)^j 10, nu_last = (01)^j,
  // lambda empty or strongly negative. Maximal k wins.
  const std::size_t j = ju(p);
  const std::string& s = w.bits();
  const std::string nu_last = valley_run(j).bits();
  const std::string nu_mid = (valley_run(j) + kPeak).bits();
  const std::string rigid = (kRise + valley_run(j - 1) + kPeak).bits();
  const std::size_t last_start = s.size() - nu_last.size();

  std::size_t mid_run = 0;
  while (last_start >= (mid_run + 1) * nu_mid.size() &&
         s.compare(last_start - (mid_run + 1) * nu_mid.size(), nu_mid.size(),
                   nu_mid) == 0) {
    ++mid_run;
  }

  const std::vector<int> points = height_points(w);
  for (std::size_t mids = mid_run + 1; mids-- > 0;) {
    const std::size_t first_end = last_start - mids * nu_mid.size();
    if (first_end < rigid.size() + 1) continue;
    if (s.compare(first_end - rigid.size(), rigid.size(), rigid) != 0) continue;
    const std::size_t q = first_end - rigid.size();
    // lambda reaches back to the last return to the axis before q; the
    // point q itself sits at -1, so the loop stops strictly before it.
    std::size_t z = q;
    while (points[z] != 0) --z;
    // s[z] is the fall that opens nu_1.
    const Word lambda = w.prefix(q).suffix(z + 1);
    if (!lambda.empty() && !is_strongly_negative(lambda)) {
      throw std::logic_error(
          "decompose_neg_rise: lambda is not strongly negative");
    }
    d.head = w.prefix(z);
    d.tail = lambda;
    d.nu_blocks.push_back(w.prefix(first_end).suffix(z));
    for (std::size_t i = 0; i < mids; ++i) {
      const std::size_t b = first_end + i * nu_mid.size();
      d.nu_blocks.push_back(w.prefix(b + nu_mid.size()).suffix(b));
    }
    d.nu_blocks.push_back(w.suffix(last_start));
    d.variant = d.head.ends_with(kPeak)
                    ? NegRiseDecomposition::Variant::BlockMirrorDropPeak
                    : NegRiseDecomposition::Variant::BlockMirror;
    if (d.variant == NegRiseDecomposition::Variant::BlockMirrorDropPeak) {
      d.head = d.head.prefix(d.head.size() - 2);
    }
    return d;
  }

  // No block suffix: the peak-shift result is already factor-free.
  d.variant = NegRiseDecomposition::Variant::PeakShift;
  d.head = mu2;
  d.tail = Word{};
  return d;
}

Word neg_rise_underground(const Word& w, const PatternParam& p) {
  const NegRiseDecomposition d = decompose_neg_rise(w, p);
  const std::size_t j = ju(p);
  const Word full_run = peak_run(j);
  switch (d.variant) {
    case NegRiseDecomposition::Variant::NoPeak:
      return d.head + full_run + kFall + d.tail + kRise;
    case NegRiseDecomposition::Variant::PeakShift:
      return d.head + kFall + d.tail + kRise + full_run + kFall + kRise;
    case NegRiseDecomposition::Variant::BlockMirror:
    case NegRiseDecomposition::Variant::BlockMirrorDropPeak: {
      const Word mirrored_mid = full_run + kFall + kRise;
      Word out = d.head;
      if (d.variant == NegRiseDecomposition::Variant::BlockMirror) {
        out += full_run + kFall + d.tail + kRise;
      } else {
        out += kFall + d.tail + kRise + full_run + kFall + kRise;
      }
      for (std::size_t i = 1; i < d.nu_blocks.size(); ++i) out += mirrored_mid;
      return out;
    }
  }
  throw std::logic_error("neg_rise_underground: bad variant");
}

Word underground_from_zero(const Word& to_zero_child, const PatternParam& p) {
  const auto [head, prim] = rightmost_primitive_suffix(to_zero_child);
  const Word mirrored = complement(prim);
  if (!contains_forbidden(mirrored, p)) return head + mirrored;
  return head + swap_forbidden(mirrored, p);
}

Word swap_forbidden(const Word& v, const PatternParam& p, SwapStats* stats) {
  const std::size_t j = ju(p);
  const std::string& pat = p.forbidden().bits();
  const std::string full_run = peak_run(j).bits();
  std::string s = v.bits();
  if (stats != nullptr) {
    *stats = SwapStats{};
    for (std::size_t i = 0; i + pat.size() <= s.size(); ++i) {
      if (s.compare(i, pat.size(), pat) == 0) ++stats->initial_occurrences;
    }
  }
  const int cap = 4 * static_cast<int>(s.size()) + 16;
  int iterations = 0;
  while (true) {
    const std::size_t o = s.find(pat);
    if (o == std::string::npos) break;
    if (++iterations > cap) {
      throw std::logic_error("swap_forbidden: exchange loop did not settle");
    }
    const std::vector<int> points = height_points(Word(s));
    const int line = points[o];
    // Rightmost same-ordinate point left of the occurrence entered by two falls.
    std::size_t t1 = 0;
    bool found = false;
    for (std::size_t t = o; t-- > 2;) {
      if (points[t] == line && s[t - 1] == '0' && s[t - 2] == '0') {
        t1 = t;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error(
          "swap_forbidden: no anchor point left of the forbidden factor");
    }
    std::size_t m = 0;
    while (t1 + 2 * m + 1 < s.size() && s[t1 + 2 * m] == '1' &&
           s[t1 + 2 * m + 1] == '0') {
      ++m;
    }
    if (m >= j || t1 + 2 * m > o) {
      throw std::logic_error("swap_forbidden: peak run at anchor too long");
    }
    if (t1 + 2 * m >= s.size() || s[t1 + 2 * m] != '0') {
      throw std::logic_error(
          "swap_forbidden: anchor run not followed by a fall");
    }
    const std::string displaced = s.substr(t1, 2 * m);
    s = s.substr(0, t1) + full_run + s.substr(t1 + 2 * m, o - (t1 + 2 * m)) +
        displaced + s.substr(o + 2 * j);
    if (stats != nullptr) ++stats->swaps;
  }
  return Word(s);
}

Word swap_forbidden_inverse(const Word& v, const PatternParam& p,
                            SwapStats* stats) {
  const std::size_t j = ju(p);
  const std::string& aux = p.auxiliary().bits();
  const std::string full_run = peak_run(j).bits();
  std::string s = v.bits();
  if (stats != nullptr) {
    *stats = SwapStats{};
    for (std::size_t i = 0; i + aux.size() <= s.size(); ++i) {
      if (s.compare(i, aux.size(), aux) == 0) ++stats->initial_occurrences;
    }
  }
  const int cap = 4 * static_cast<int>(s.size()) + 16;
  int iterations = 0;
  while (true) {
    const std::size_t o = s.find(aux);
    if (o == std::string::npos) break;
    if (++iterations > cap) {
      throw std::logic_error(
          "swap_forbidden_inverse: exchange loop did not settle");
    }
    const std::size_t block = o + 2;        // the (10)^j inside 00 (10)^j 0
    const std::size_t block_end = block + 2 * j;
    const std::vector<int> points = height_points(Word(s));
    const int line = points[block_end];
    // Leftmost same-ordinate point right of the block left by two rises.
    std::size_t t2 = 0;
    bool found = false;
    for (std::size_t t = block_end + 1; t + 2 <= s.size(); ++t) {
      if (points[t] == line && s[t] == '1' && s[t + 1] == '1') {
        t2 = t;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error(
          "swap_forbidden_inverse: no anchor point right of the peak run");
    }
    std::size_t m = 0;
    while (t2 >= 2 * m + 2 && s[t2 - 2 * m - 2] == '1' &&
           s[t2 - 2 * m - 1] == '0') {
      ++m;
    }
    if (m >= j || t2 - 2 * m < block_end) {
      throw std::logic_error(
          "swap_forbidden_inverse: peak run at anchor too long");
    }
    if (t2 - 2 * m < 1 || s[t2 - 2 * m - 1] != '1') {
      throw std::logic_error(
          "swap_forbidden_inverse: anchor run not preceded by a rise");
    }
    const std::string displaced = s.substr(t2 - 2 * m, 2 * m);
    s = s.substr(0, block) + displaced +
        s.substr(block_end, (t2 - 2 * m) - block_end) + full_run + s.substr(t2);
    if (stats != nullptr) ++stats->swaps;
  }
  return Word(s);
}

Expansion expand(const Word& w, int h, const PatternParam& p) {
  const ExpansionCase c = classify(w, p);
  require_h(h, p, "expand");
  switch (c.suffix_class) {
    case SuffixClass::NegRise:
      return expand_neg_rise(w, h, p);
    case SuffixClass::TrailingPeaks:
      if (c.k == 0) return expand_peaks_k0(w, h, p);
      if (c.k == 1) return expand_peaks_k1(w, h, p);
      return expand_peaks_kge2(w, h, p);
    case SuffixClass::Plain:
      if (c.k == 0) return expand_plain_k0(w, h, p);
      if (c.k == 1) return expand_plain_k1(w, h, p);
      return expand_plain_kge2(w, h, p);
  }
  throw std::logic_error("expand: unreachable suffix class");
}

}  // namespace pavgen
