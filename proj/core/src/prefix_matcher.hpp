#pragma once

// Backtracking matcher shared by match_pattern and the successor generator.
// Bindings are kept as (offset, length) slices of the text so that callers
// can build result words without materialising a Substitution per match.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "monvar/word.hpp"

namespace monvar::detail {

struct Slice {
  std::size_t offset = 0;
  std::size_t length = 0;
};

class PatternShape {
 public:
  explicit PatternShape(const Word& pattern) {
    slot_of_.reserve(pattern.size());
    for (auto v : pattern) {
      auto it = std::find(vars_.begin(), vars_.end(), v);
      slot_of_.push_back(static_cast<std::size_t>(it - vars_.begin()));
      if (it == vars_.end()) vars_.push_back(v);
    }
  }

  /// Distinct variables in order of first occurrence.
  const std::vector<Variable>& vars() const { return vars_; }
  const std::vector<std::size_t>& slot_of() const { return slot_of_; }

  std::size_t slot(Variable v) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) -
                                    vars_.begin());
  }

 private:
  std::vector<Variable> vars_;
  std::vector<std::size_t> slot_of_;
};

/// Calls on_match(slices, end) for every assignment of the pattern's
/// variables to factors of `text` such that the image of the pattern equals
/// text[start, end). `slices` is indexed like shape.vars().
template <class OnMatch>
void match_prefixes_at(const PatternShape& shape, std::span<const Variable> text,
                       std::size_t start, OnMatch&& on_match) {
  std::vector<Slice> slices(shape.vars().size());
  std::vector<char> bound(shape.vars().size(), 0);
  const auto& slot_of = shape.slot_of();

  auto step = [&](auto&& self, std::size_t i, std::size_t pos) -> void {
    if (i == slot_of.size()) {
      on_match(static_cast<const std::vector<Slice>&>(slices), pos);
      return;
    }
    const std::size_t s = slot_of[i];
    if (bound[s]) {
      const Slice sl = slices[s];
      if (pos + sl.length > text.size()) return;
      if (!std::equal(text.begin() + sl.offset, text.begin() + sl.offset + sl.length,
                      text.begin() + pos)) {
        return;
      }
      self(self, i + 1, pos + sl.length);
      return;
    }
    bound[s] = 1;
    slices[s].offset = pos;
    for (std::size_t len = 0; pos + len <= text.size(); ++len) {
      slices[s].length = len;
      self(self, i + 1, pos + len);
    }
    bound[s] = 0;
  };
  step(step, 0, start);
}

inline Substitution to_substitution(const PatternShape& shape,
                                    std::span<const Variable> text,
                                    const std::vector<Slice>& slices) {
  Substitution xi;
  for (std::size_t k = 0; k < shape.vars().size(); ++k) {
    xi.bind(shape.vars()[k], Word(text.subspan(slices[k].offset, slices[k].length)));
  }
  return xi;
}

}  // namespace monvar::detail
