#pragma once

// Words of the free monoid over a countable alphabet of variables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monvar {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable token: a lowercase letter, optionally followed by a positive
/// index (x, y, t, x1, x2, ...). Variables order by letter, then by index,
/// with the unindexed letter first.
class Variable {
 public:
  static constexpr std::uint32_t kMaxIndex = (1u << 24) - 1;

  constexpr Variable() = default;

  /// Throws std::invalid_argument unless `letter` is in a-z and
  /// `index` <= kMaxIndex.
  explicit Variable(char letter, std::uint32_t index = 0);

  char letter() const { return static_cast<char>('a' + (code_ >> 24)); }
  std::uint32_t index() const { return code_ & kMaxIndex; }
  std::uint32_t code() const { return code_; }
  std::string token() const;

  friend constexpr bool operator==(Variable, Variable) = default;
  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  std::uint32_t code_ = 0;
};

/// An element of the free monoid. The empty word is written "1" in text.
class Word {
 public:
  using value_type = Variable;
  using const_iterator = std::vector<Variable>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Variable> letters) : letters_(letters) {}
  Word(std::span<const Variable> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Variable operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Variable> letters() const { return letters_; }

  /// The factor of length `len` starting at `pos`.
  Word factor(std::size_t pos, std::size_t len) const;
  Word reversed() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order on letters (a proper prefix is smaller).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Variable> letters_;
};

/// Orders words by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLex>;
using VariableSet = std::set<Variable>;

/// Finite map from variables to words; variables outside the map are fixed.
class Substitution {
 public:
  using Map = std::map<Variable, Word>;

  Substitution() = default;
  Substitution(std::initializer_list<Map::value_type> bindings)
      : map_(bindings) {}
  explicit Substitution(Map map) : map_(std::move(map)) {}

  void bind(Variable v, Word image) { map_[v] = std::move(image); }
  const Word* find(Variable v) const;
  const Map& bindings() const { return map_; }
  bool empty() const { return map_.empty(); }

  Word apply(const Word& w) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution& a, const Substitution& b) {
    return a.map_ <=> b.map_;
  }

 private:
  Map map_;
};

// Text syntax: variable tokens, each optionally followed by ^k (k >= 1);
// "1" alone denotes the empty word. Whitespace between tokens is ignored.
Word parse_word(std::string_view text);
Variable parse_variable(std::string_view text);
std::string format_word(const Word& w);
std::string format_substitution(const Substitution& s);

VariableSet content(const Word& w);
std::size_t occ(const Word& w, Variable v);
Word ini(const Word& w);
Word fin(const Word& w);
Word power(const Word& w, std::size_t k);

inline Word apply(const Substitution& s, const Word& w) { return s.apply(w); }

/// True iff w has a factor z^k for some non-empty word z.
bool contains_power_factor(const Word& w, std::size_t k);

/// True iff `needle` occurs as a contiguous factor of `haystack`.
bool has_factor(const Word& haystack, const Word& needle);

inline namespace literals {
/// "xyx"_w parses a word at the call site; intended for tests and constants.
inline Word operator""_w(const char* text, std::size_t len) {
  return parse_word(std::string_view(text, len));
}
}  // namespace literals

}  // namespace monvar

template <>
struct std::hash<monvar::Word> {
  std::size_t operator()(const monvar::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ w.size();
    for (auto v : w) {
      h ^= v.code();
      h *= 0x100000001b3ull;
    }
    return h;
  }
};
