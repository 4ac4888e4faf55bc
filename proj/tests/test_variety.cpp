#include <gtest/gtest.h>

#include "monvar/variety.hpp"
#include "oracles.hpp"

using namespace monvar;

namespace {

const Variable x('x'), y('y');

VarietyHandle B(BuiltinVariety b) { return VarietyHandle::builtin(b); }
const VarietyHandle kT = B(BuiltinVariety::kTrivial);
const VarietyHandle kSL = B(BuiltinVariety::kSemilattice);
const VarietyHandle kC = B(BuiltinVariety::kCommutativeC);
const VarietyHandle kLRB = B(BuiltinVariety::kLeftRegularBand);
const VarietyHandle kRRB = B(BuiltinVariety::kRightRegularBand);

const Presentation kSigmaX{Identity("xyxyx"_w, "yxyxx"_w), Identity("xyyxx"_w, "yxxyx"_w)};
const Presentation kSigmaY{Identity("xyxyx"_w, "xyyxx"_w)};

Identity id(std::string_view a, std::string_view b) { return Identity(parse_word(a), parse_word(b)); }

TEST(Deciders, Examples) {
  EXPECT_EQ(satisfies(kLRB, id("xyxy", "xyyx")), Verdict::yes());
  EXPECT_EQ(satisfies(kLRB, id("yxyxx", "xyxyx")), Verdict::no());
  EXPECT_EQ(satisfies(kC, id("x^2y", "yx^3")), Verdict::yes());
  EXPECT_EQ(satisfies(VarietyHandle::join({kC, kLRB}), id("x^2y^2", "y^2x^2")), Verdict::no());
  EXPECT_EQ(satisfies(kSL, id("xyx", "y^2x")), Verdict::yes());
  EXPECT_EQ(satisfies(kSL, id("xy", "x")), Verdict::no());
  EXPECT_EQ(satisfies(kRRB, id("xy", "yxy")), Verdict::yes());
  EXPECT_EQ(satisfies(kRRB, id("xy", "yx")), Verdict::no());
  EXPECT_EQ(satisfies(kT, id("x", "y")), Verdict::yes());
}

TEST(Deciders, CNormalForm) {
  EXPECT_EQ(c_normal_form("x^3y"_w), "x^2y"_w);
  EXPECT_EQ(c_normal_form(Word{}), Word{});
  EXPECT_EQ(c_normal_form("yx"_w), "xy"_w);
  EXPECT_EQ(c_normal_form("yxyyx"_w), "x^2y^2"_w);
}

TEST(Deciders, RrbIsLrbReversed) {
  auto words = oracle::all_words({x, y}, 3);
  for (const auto& u : words) {
    for (const auto& v : words) {
      EXPECT_EQ(satisfies(kRRB, Identity(u, v)),
                satisfies(kLRB, Identity(u.reversed(), v.reversed())));
    }
  }
}

// Every derivable pair is decided Yes, and every decided-Yes pair has a
// derivation; lengths up to 3 keep this quick (the full check runs in the
// acceptance suite).
TEST(Deciders, AgreeWithReferencePresentations) {
  auto words = oracle::all_words({x, y}, 3);
  SearchBounds b{10, 8, 1'000'000};
  for (auto kind : {BuiltinVariety::kSemilattice, BuiltinVariety::kCommutativeC,
                    BuiltinVariety::kLeftRegularBand, BuiltinVariety::kRightRegularBand}) {
    Presentation sigma = *reference_presentation(kind);
    for (const auto& u : words) {
      SearchTree tree(sigma, u, b);
      for (const auto& v : words) {
        bool decided = satisfies(B(kind), Identity(u, v)).is_yes();
        bool reached = tree.contains(v);
        EXPECT_EQ(decided, reached) << name_of(kind) << ": " << format_word(u) << " = "
                                    << format_word(v);
        if (reached) {
          EXPECT_TRUE(accepted(verify_certificate(sigma, *tree.certificate_to(v))));
        }
      }
    }
  }
}

TEST(Presented, NeverAnswersNo) {
  auto mon = VarietyHandle::all_monoids();
  EXPECT_EQ(satisfies(mon, id("xy", "xy")), Verdict::yes());
  EXPECT_EQ(satisfies(mon, id("xy", "yx")), Verdict::unknown(UnknownReason::kBounds));
  auto Y = VarietyHandle::presented(kSigmaY, "Y");
  EXPECT_EQ(satisfies(Y, id("xyxyx", "xyyxx")), Verdict::yes());
  EXPECT_EQ(satisfies(Y, id("yxyxx", "xyyxx")), Verdict::unknown(UnknownReason::kBounds));
  EXPECT_THROW(satisfies(VarietyHandle::presented(Presentation{id("x", "xy")}), id("x", "x^2")),
               ContentUnbalancedError);
}

TEST(Isoterms, Examples) {
  auto X = VarietyHandle::presented(kSigmaX, "X");
  auto Y = VarietyHandle::presented(kSigmaY, "Y");
  auto vx = VarietyHandle::join({kLRB, X});
  EXPECT_EQ(isoterm_for(vx, "yxyxx"_w), Verdict::yes());
  EXPECT_EQ(isoterm_for(kSL, "x"_w), Verdict::no());
  EXPECT_EQ(isoterm_for(VarietyHandle::meet({Y, vx}), "yxyxx"_w), Verdict::yes());
  EXPECT_EQ(isoterm_for(kT, Word{}), Verdict::no());
  EXPECT_EQ(isoterm_for(kSL, Word{}), Verdict::yes());
  EXPECT_EQ(isoterm_for(kC, "x"_w), Verdict::yes());
  EXPECT_EQ(isoterm_for(kC, "xy"_w), Verdict::no());
  EXPECT_EQ(isoterm_for(Y, "yxyxx"_w), Verdict::yes());
  EXPECT_EQ(isoterm_for(X, "yxyxx"_w), Verdict::no());
}

TEST(Isoterms, MeetRule) {
  auto X = VarietyHandle::presented(kSigmaX, "X");
  auto Y = VarietyHandle::presented(kSigmaY, "Y");
  std::vector<VarietyHandle> parts{kC, kLRB, X, Y};
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      for (const auto& w : {"x"_w, "xy"_w, "xyxyx"_w, "yxyxx"_w, "xyyxx"_w}) {
        Verdict m = isoterm_for(VarietyHandle::meet({a, b}), w);
        Verdict va = isoterm_for(a, w), vb = isoterm_for(b, w);
        if (va.is_yes() && vb.is_yes()) EXPECT_TRUE(m.is_yes());
        if (m.is_yes()) EXPECT_TRUE(va.is_yes() && vb.is_yes());
      }
    }
  }
}

TEST(Composite, JoinMonotonicity) {
  auto words = oracle::all_words({x, y}, 3);
  auto join = VarietyHandle::join({kC, kLRB});
  for (const auto& u : words) {
    for (const auto& v : words) {
      Identity i(u, v);
      if (satisfies(join, i).is_yes()) {
        EXPECT_TRUE(satisfies(kC, i).is_yes());
        EXPECT_TRUE(satisfies(kLRB, i).is_yes());
      }
    }
  }
}

TEST(Composite, MeetUsesUnionOfPresentations) {
  auto X = VarietyHandle::presented(kSigmaX, "X");
  auto Y = VarietyHandle::presented(kSigmaY, "Y");
  EXPECT_EQ(satisfies(VarietyHandle::meet({X, Y}), id("yxyxx", "yxxyx")), Verdict::yes());
  EXPECT_THROW(VarietyHandle::meet({}), std::invalid_argument);
  EXPECT_THROW(VarietyHandle::join({}), std::invalid_argument);
}

TEST(Witnesses, CompletelyRegular) {
  auto f = completely_regular_witness(Presentation{id("xy", "xyx")}, 3);
  ASSERT_TRUE(std::holds_alternative<Found>(f));
  EXPECT_EQ(std::get<Found>(f).n, 1u);
  EXPECT_TRUE(std::holds_alternative<NoneWithinBounds>(
      completely_regular_witness(*reference_presentation(BuiltinVariety::kCommutativeC), 5)));
  EXPECT_TRUE(std::holds_alternative<NoneWithinBounds>(completely_regular_witness(Presentation{}, 3)));
  EXPECT_THROW(completely_regular_witness(Presentation{}, 0), std::invalid_argument);
}

TEST(Witnesses, Combinatorial) {
  auto c = combinatorial_witness(*reference_presentation(BuiltinVariety::kCommutativeC), 3);
  ASSERT_TRUE(std::holds_alternative<Found>(c));
  EXPECT_EQ(std::get<Found>(c).n, 2u);
  auto l = combinatorial_witness(Presentation{id("xy", "xyx")}, 3);
  ASSERT_TRUE(std::holds_alternative<Found>(l));
  EXPECT_EQ(std::get<Found>(l).n, 1u);
  EXPECT_TRUE(std::holds_alternative<NoneWithinBounds>(
      combinatorial_witness(Presentation{id("x", "x^3")}, 5)));
}

TEST(Expressions, Parse) {
  EXPECT_EQ(parse_variety("LRB").kind(), VarietyHandle::Kind::kBuiltin);
  auto j = parse_variety(" join( C , meet(LRB, RRB) ) ");
  EXPECT_EQ(j.kind(), VarietyHandle::Kind::kJoin);
  EXPECT_EQ(j.components().size(), 2u);
  EXPECT_EQ(parse_variety("MON").kind(), VarietyHandle::Kind::kPresented);
  EXPECT_THROW(parse_variety("join()"), ParseError);
  EXPECT_THROW(parse_variety("XYZ"), ParseError);
  EXPECT_THROW(parse_variety("meet(C,"), ParseError);
  EXPECT_THROW(parse_variety("C extra"), ParseError);
}

TEST(Verdicts, Text) {
  EXPECT_EQ(to_string(Verdict::yes()), "Yes");
  EXPECT_EQ(to_string(Verdict::no()), "No");
  EXPECT_EQ(to_string(Verdict::unknown(UnknownReason::kComposition)), "Unknown(composition)");
}

}  // namespace
