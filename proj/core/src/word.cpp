#include "monvar/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace monvar {

Variable::Variable(char letter, std::uint32_t index) {
  if (letter < 'a' || letter > 'z') {
    throw std::invalid_argument(std::string("variable letter must be a-z, got '") +
                                letter + "'");
  }
  if (index > kMaxIndex) throw std::invalid_argument("variable index too large");
  code_ = (static_cast<std::uint32_t>(letter - 'a') << 24) | index;
}

std::string Variable::token() const {
  std::string out(1, letter());
  if (index() != 0) out += std::to_string(index());
  return out;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  return Word(std::span<const Variable>(letters_).subspan(pos, len));
}

Word Word::reversed() const {
  return Word(std::vector<Variable>(letters_.rbegin(), letters_.rend()));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

const Word* Substitution::find(Variable v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

Word Substitution::apply(const Word& w) const {
  std::vector<Variable> out;
  out.reserve(w.size());
  for (auto v : w) {
    if (const Word* image = find(v)) {
      out.insert(out.end(), image->begin(), image->end());
    } else {
      out.push_back(v);
    }
  }
  return Word(std::move(out));
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a run of digits at `pos` as a positive integer.
std::uint64_t read_number(std::string_view text, std::size_t& pos,
                          std::string_view what) {
  std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (start == pos) {
    throw ParseError("expected " + std::string(what) + " at offset " +
                     std::to_string(start) + " in '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc()) {
    throw ParseError("number out of range in '" + std::string(text) + "'");
  }
  return value;
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

// Word exponents are expanded eagerly, so keep them sane.
constexpr std::uint64_t kMaxExponent = 1u << 20;

}  // namespace

Variable parse_variable(std::string_view text) {
  Word w = parse_word(text);
  if (w.size() != 1) {
    throw ParseError("expected a single variable, got '" + std::string(text) + "'");
  }
  return w[0];
}

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty word text; write 1 for the empty word");
  if (text[pos] == '1') {
    ++pos;
    skip_space(text, pos);
    if (pos != text.size()) {
      throw ParseError("'1' denotes the empty word and must stand alone: '" +
                       std::string(text) + "'");
    }
    return Word();
  }
  std::vector<Variable> letters;
  while (pos < text.size()) {
    char c = text[pos];
    if (c < 'a' || c > 'z') {
      throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                       std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    ++pos;
    std::uint64_t index = 0;
    if (pos < text.size() && is_digit(text[pos])) {
      if (text[pos] == '0') {
        throw ParseError("variable index must be positive in '" + std::string(text) +
                         "'");
      }
      index = read_number(text, pos, "variable index");
      if (index > Variable::kMaxIndex) throw ParseError("variable index too large");
    }
    Variable v(c, static_cast<std::uint32_t>(index));
    std::uint64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = read_number(text, pos, "exponent");
      if (exponent == 0) {
        throw ParseError("exponent 0 is not allowed in '" + std::string(text) + "'");
      }
      if (exponent > kMaxExponent) throw ParseError("exponent too large");
    }
    letters.insert(letters.end(), exponent, v);
    skip_space(text, pos);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i].token();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_substitution(const Substitution& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [v, image] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += v.token() + "->" + format_word(image);
  }
  return out + "}";
}

VariableSet content(const Word& w) { return VariableSet(w.begin(), w.end()); }

std::size_t occ(const Word& w, Variable v) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), v));
}

Word ini(const Word& w) {
  std::vector<Variable> out;
  VariableSet seen;
  for (auto v : w) {
    if (seen.insert(v).second) out.push_back(v);
  }
  return Word(std::move(out));
}

Word fin(const Word& w) {
  std::vector<Variable> out;
  VariableSet seen;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (seen.insert(*it).second) out.push_back(*it);
  }
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Word power(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out *= w;
  return out;
}

bool contains_power_factor(const Word& w, std::size_t k) {
  if (k == 0) return true;
  const std::size_t n = w.size();
  for (std::size_t period = 1; period * k <= n; ++period) {
    // z^k at position i means w[j] == w[j + period] across the span.
    std::size_t run = 0;  // consecutive positions j with w[j] == w[j + period]
    for (std::size_t j = 0; j + period < n; ++j) {
      run = (w[j] == w[j + period]) ? run + 1 : 0;
      if (run >= period * (k - 1)) return true;
    }
    if (k == 1) return true;
  }
  return false;
}

bool has_factor(const Word& haystack, const Word& needle) {
  auto h = haystack.letters();
  auto n = needle.letters();
  return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

}  // namespace monvar
