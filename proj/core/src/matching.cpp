#include "monvar/matching.hpp"

#include <algorithm>

#include "prefix_matcher.hpp"

namespace monvar {

void match_prefixes(const Word& pattern, std::span<const Variable> text,
                    const PrefixMatchFn& on_match) {
  detail::PatternShape shape(pattern);
  detail::match_prefixes_at(shape, text, 0,
                            [&](const std::vector<detail::Slice>& slices, std::size_t end) {
                              on_match(detail::to_substitution(shape, text, slices), end);
                            });
}

std::vector<Substitution> match_pattern(const Word& pattern, const Word& target) {
  detail::PatternShape shape(pattern);
  auto text = target.letters();
  std::vector<Substitution> out;
  detail::match_prefixes_at(shape, text, 0,
                            [&](const std::vector<detail::Slice>& slices, std::size_t end) {
                              if (end == text.size()) {
                                out.push_back(detail::to_substitution(shape, text, slices));
                              }
                            });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monvar
