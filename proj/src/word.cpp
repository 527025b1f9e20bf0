#include "pavgen/word.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pavgen {

namespace {

std::string checked_bits(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      std::ostringstream msg;
      msg << "invalid character '" << c << "' at position " << i
          << ": expected '0' or '1'";
      throw std::invalid_argument(msg.str());
    }
  }
  return std::string(text);
}

}  // namespace

Word::Word(std::string_view bits) : bits_(checked_bits(bits)) {}

std::size_t Word::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

Word Word::prefix(std::size_t count) const {
  return Word(Unchecked{}, bits_.substr(0, count));
}

Word Word::suffix(std::size_t start) const {
  return Word(Unchecked{}, bits_.substr(start));
}

bool Word::starts_with(const Word& head) const {
  return bits_.size() >= head.bits_.size() &&
         bits_.compare(0, head.bits_.size(), head.bits_) == 0;
}

bool Word::ends_with(const Word& tail) const {
  return bits_.size() >= tail.bits_.size() &&
         bits_.compare(bits_.size() - tail.bits_.size(), tail.bits_.size(),
                       tail.bits_) == 0;
}

Word Word::operator+(const Word& rhs) const {
  return Word(Unchecked{}, bits_ + rhs.bits_);
}

Word& Word::operator+=(const Word& rhs) {
  bits_ += rhs.bits_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.bits();
}

Word parse_word(std::string_view text) { return Word(text); }

Word run(Step s, std::size_t count) {
  return Word(std::string(count, static_cast<char>(s)));
}

Word peak_run(std::size_t count) {
  std::string bits;
  bits.reserve(2 * count);
  for (std::size_t i = 0; i < count; ++i) bits += "10";
  return Word(bits);
}

Word valley_run(std::size_t count) {
  std::string bits;
  bits.reserve(2 * count);
  for (std::size_t i = 0; i < count; ++i) bits += "01";
  return Word(bits);
}

OrdinateProfile ordinate_profile(const Word& w) {
  OrdinateProfile profile;
  profile.prefix_heights.reserve(w.size());
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    profile.prefix_heights.push_back(h);
  }
  profile.endpoint = h;
  return profile;
}

std::vector<int> height_points(const Word& w) {
  std::vector<int> points;
  points.reserve(w.size() + 1);
  int h = 0;
  points.push_back(h);
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    points.push_back(h);
  }
  return points;
}

int endpoint_ordinate(const Word& w) {
  return static_cast<int>(w.ones()) - static_cast<int>(w.zeros());
}

std::vector<std::size_t> occurrences(const Word& w, const Word& factor) {
  if (factor.empty()) {
    throw std::invalid_argument("occurrences: factor must be nonempty");
  }
  std::vector<std::size_t> starts;
  const std::string& text = w.bits();
  const std::string& pat = factor.bits();
  if (text.size() < pat.size()) return starts;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
    if (text.compare(i, pat.size(), pat) == 0) starts.push_back(i);
  }
  return starts;
}

bool contains_factor(const Word& w, const Word& factor) {
  if (factor.empty()) {
    throw std::invalid_argument("contains_factor: factor must be nonempty");
  }
  return w.bits().find(factor.bits()) != std::string::npos;
}

bool is_primitive(const Word& w) {
  if (w.size() < 2) return false;
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    if (i + 1 < w.size() && h < 1) return false;
  }
  return h == 0;
}

bool is_positive(const Word& w) {
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

bool is_negative(const Word& w) {
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    if (h > 0) return false;
  }
  return h == 0;
}

bool is_strongly_negative(const Word& w) { return is_negative(w); }

bool is_underground(const Word& w) {
  if (w.empty()) return false;
  const std::vector<int> points = height_points(w);
  const int e = points.back();
  int suffix_max = e;
  // A nonempty negative suffix starts at some point i < size at ordinate e
  // with every later point at or below e.
  for (std::size_t i = w.size(); i-- > 0;) {
    suffix_max = std::max(suffix_max, points[i + 1]);
    if (points[i] == e && suffix_max <= e) return true;
  }
  return false;
}

Word complement(const Word& w) {
  std::string bits = w.bits();
  for (char& c : bits) c = c == '0' ? '1' : '0';
  return Word(bits);
}

std::pair<Word, Word> rightmost_primitive_suffix(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument(
        "rightmost_primitive_suffix: word is empty");
  }
  if (w.step(w.size() - 1) == Step::Rise) {
    throw std::invalid_argument(
        "rightmost_primitive_suffix: word ends with a rise, no primitive "
        "suffix exists");
  }
  const std::vector<int> points = height_points(w);
  const int e = points.back();
  std::size_t i = w.size() - 1;
  while (i > 0 && points[i] > e) --i;
  if (points[i] != e) {
    // The endpoint is a strict minimum of the whole path.
    throw std::invalid_argument(
        "rightmost_primitive_suffix: no primitive suffix exists");
  }
  return {w.prefix(i), w.suffix(i)};
}

std::vector<Word> factorize(const Word& w) {
  std::vector<Word> factors;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w.step(i) == Step::Rise ? 1 : -1;
    if (h == 0) {
      factors.push_back(w.prefix(i + 1).suffix(start));
      start = i + 1;
    }
  }
  if (start < w.size()) factors.push_back(w.suffix(start));
  return factors;
}

std::string render_ascii(const Word& w) {
  if (w.empty()) return "ε";
  const std::vector<int> points = height_points(w);
  const int top = *std::max_element(points.begin(), points.end());
  const int bottom = *std::min_element(points.begin(), points.end());
  std::string out;
  for (int y = top - 1; y >= bottom; --y) {
    std::string row(w.size(), ' ');
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.step(i) == Step::Rise && points[i] == y) row[i] = '/';
      if (w.step(i) == Step::Fall && points[i + 1] == y) row[i] = '\\';
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    if (y > bottom) out += '\n';
  }
  return out;
}

PatternParam::PatternParam(int j) : j_(j) {
  if (j < 1) {
    throw std::invalid_argument("pattern parameter j must be >= 1");
  }
  forbidden_ = peak_run(static_cast<std::size_t>(j)) + run(Step::Rise, 1);
  auxiliary_ = run(Step::Fall, 2) + peak_run(static_cast<std::size_t>(j)) +
               run(Step::Fall, 1);
}

bool contains_forbidden(const Word& w, const PatternParam& p) {
  return contains_factor(w, p.forbidden());
}

}  // namespace pavgen
