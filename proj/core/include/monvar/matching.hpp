#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "monvar/word.hpp"

namespace monvar {

/// All substitutions ξ with domain content(pattern) such that
/// apply(ξ, pattern) == target. Images may be empty. Result is sorted.
std::vector<Substitution> match_pattern(const Word& pattern, const Word& target);

/// Callback form used by the rewrite engine: reports every ξ (restricted to
/// content(pattern)) for which apply(ξ, pattern) is a prefix of
/// text[start..], together with the length of that prefix. Matches are
/// produced by left-to-right backtracking, shortest images first.
using PrefixMatchFn = std::function<void(const Substitution&, std::size_t length)>;
void match_prefixes(const Word& pattern, std::span<const Variable> text,
                    const PrefixMatchFn& on_match);

}  // namespace monvar
