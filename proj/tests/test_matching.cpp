#include <gtest/gtest.h>

#include <random>
#include <set>

#include "monvar/matching.hpp"
#include "oracles.hpp"

using namespace monvar;

namespace {

const Variable x('x'), y('y'), z('z');

std::set<Substitution> as_set(const std::vector<Substitution>& v) {
  return {v.begin(), v.end()};
}

TEST(Matching, TwoBlockSplits) {
  auto m = match_pattern("xy"_w, "xxy"_w);
  ASSERT_EQ(m.size(), 4u);
  std::set<Substitution> expected{
      Substitution{{x, Word{}}, {y, "xxy"_w}},
      Substitution{{x, "x"_w}, {y, "xy"_w}},
      Substitution{{x, "xx"_w}, {y, "y"_w}},
      Substitution{{x, "xxy"_w}, {y, Word{}}},
  };
  EXPECT_EQ(as_set(m), expected);
}

TEST(Matching, NoMatches) {
  EXPECT_TRUE(match_pattern("xx"_w, "xyx"_w).empty());
  EXPECT_TRUE(match_pattern("xyxyx"_w, "yxyxx"_w).empty());
}

TEST(Matching, RepeatedVariableConsistency) {
  auto m = match_pattern("xyx"_w, "ababa"_w);
  for (const auto& s : m) EXPECT_EQ(s.apply("xyx"_w), "ababa"_w);
  EXPECT_EQ(as_set(m), oracle::matches("xyx"_w, "ababa"_w));
}

TEST(Matching, EmptyPatternAndTarget) {
  auto m = match_pattern(Word{}, Word{});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_TRUE(m[0].empty());
  EXPECT_TRUE(match_pattern(Word{}, "x"_w).empty());
  EXPECT_EQ(match_pattern("xy"_w, Word{}).size(), 1u);
}

TEST(Matching, ResultsAreSortedAndUnique) {
  auto m = match_pattern("xyyx"_w, "xxyyxx"_w);
  EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
  EXPECT_EQ(std::adjacent_find(m.begin(), m.end()), m.end());
}

TEST(Matching, PrefixCallbackReportsEveryPrefixMatch) {
  Word text = "xyxy"_w;
  std::set<std::pair<Substitution, std::size_t>> seen;
  match_prefixes("xx"_w, std::span<const Variable>(text.begin(), text.end()),
                 [&](const Substitution& s, std::size_t len) { seen.insert({s, len}); });
  std::set<std::pair<Substitution, std::size_t>> expected;
  for (std::size_t len = 0; len <= text.size(); ++len) {
    for (const auto& s : oracle::matches("xx"_w, text.factor(0, len))) expected.insert({s, len});
  }
  EXPECT_EQ(seen, expected);
}

TEST(Matching, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937 rng(5);
  for (int i = 0; i < 400; ++i) {
    Word pattern = oracle::random_word(rng, {x, y}, 0, 4);
    Word target = oracle::random_word(rng, {x, y, z}, 0, 5);
    ASSERT_EQ(as_set(match_pattern(pattern, target)), oracle::matches(pattern, target))
        << format_word(pattern) << " vs " << format_word(target);
  }
}

}  // namespace
