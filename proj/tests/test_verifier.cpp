#include <gtest/gtest.h>

#include "monvar/shaping.hpp"
#include "monvar/verifier.hpp"

using namespace monvar;

namespace {

const Variable x('x'), y('y');

const Presentation kSigmaE{Identity("x^2"_w, "x^3"_w), Identity("x^2y"_w, "xyx"_w),
                           Identity("x^2y^2"_w, "y^2x^2"_w)};

TEST(Balancing, Examples) {
  auto b = balance_identity("xy"_w, "yxy"_w);
  EXPECT_EQ(b.identity(), Identity("xxyx^2y^3"_w, "xyxyx^2y^2"_w));
  EXPECT_EQ(b.n, 4u);

  auto c = balance_identity("xyxy"_w, "xyyx"_w);
  EXPECT_EQ(c.identity(), Identity("xyxyx^3y^3"_w, "xyyxx^3y^3"_w));
  EXPECT_EQ(c.n, 5u);

  EXPECT_THROW(balance_identity("xy"_w, "xy"_w), BalancingError);
  EXPECT_THROW(balance_identity("xyx"_w, "xy"_w), BalancingError);
  EXPECT_THROW(balance_identity("x"_w, "xx"_w), BalancingError);
}

TEST(Balancing, OutputInvariantsAndDerivability) {
  const std::vector<std::pair<Word, Word>> inputs{
      {"xy"_w, "yxy"_w}, {"xyxy"_w, "xyyx"_w}, {"xy"_w, "yx"_w}, {"xxy"_w, "yx"_w}};
  for (const auto& [u1, v1] : inputs) {
    auto b = balance_identity(u1, v1);
    EXPECT_FALSE(b.identity().trivial());
    for (const Word* w : {&b.u, &b.v}) {
      EXPECT_EQ(occ(*w, x), b.n);
      EXPECT_EQ(occ(*w, y), b.n);
    }
    Presentation premises = balancing_premises(u1, v1);
    auto r = derive(premises, b.u, b.v);
    ASSERT_TRUE(is_proved(r)) << format_word(u1) << " = " << format_word(v1);
    EXPECT_TRUE(accepted(verify_certificate(premises, std::get<Proved>(r).certificate)));
  }
}

TEST(Shape, Validator) {
  EXPECT_FALSE(shape_violation("xyxy"_w, "yxyx"_w, 2).has_value());
  EXPECT_TRUE(shape_violation("xyxy"_w, "xyyx"_w, 2).has_value());
  EXPECT_TRUE(shape_violation("xyxy"_w, "xyxy"_w, 2).has_value());
  EXPECT_TRUE(shape_violation("xyx"_w, "yxy"_w, 2).has_value());
  EXPECT_TRUE(shape_violation("xyxyt"_w, "yxyxt"_w, 2).has_value());
}

TEST(Shape, Search) {
  auto e = find_shaped_identity(kSigmaE, 2);
  ASSERT_TRUE(std::holds_alternative<ShapedIdentity>(e));
  const auto& s = std::get<ShapedIdentity>(e);
  EXPECT_EQ(s.identity(), Identity("xyxy"_w, "yxyx"_w));
  EXPECT_NE(ini(s.u), ini(s.v));
  EXPECT_TRUE(accepted(verify_certificate(kSigmaE, s.certificate)));

  Presentation sigma_c{Identity("x^2"_w, "x^3"_w), Identity("xy"_w, "yx"_w)};
  auto c = find_shaped_identity(sigma_c, 2);
  ASSERT_TRUE(std::holds_alternative<ShapedIdentity>(c));
  EXPECT_EQ(std::get<ShapedIdentity>(c).identity(), Identity("xyxy"_w, "yxyx"_w));

  EXPECT_TRUE(std::holds_alternative<NoShapedIdentity>(
      find_shaped_identity(Presentation{Identity("x^2"_w, "x^3"_w)}, 2)));
  EXPECT_THROW(find_shaped_identity(kSigmaE, 1), std::invalid_argument);
}

class Scenario : public ::testing::TestWithParam<const char*> {};

TEST_P(Scenario, StatusAndReplay) {
  Report r = run_scenario(GetParam());
  std::string name = GetParam();
  ReportStatus expected =
      name == "S3" ? ReportStatus::kPassWithAssumptions : ReportStatus::kPass;
  EXPECT_EQ(r.status(), expected) << format_report(r);
  EXPECT_EQ(r.count(CheckStatus::kFailed), 0u);
  EXPECT_EQ(r.count(CheckStatus::kAssumed), name == "S3" ? 1u : 0u);
  EXPECT_TRUE(replay_report(r));
  std::string text = format_report(r);
  for (const auto& c : r.checks) {
    EXPECT_NE(text.find("CHECK " + c.id + ": "), std::string::npos);
  }
  EXPECT_NE(text.find("STATUS: " + std::string(to_string(expected))), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(All, Scenario, ::testing::Values("S1", "S2", "S3", "S4"));

TEST(Scenarios, S1Details) {
  Report r = run_scenario("S1");
  EXPECT_EQ(r.checks.size(), 8u);
  EXPECT_EQ(r.count(CheckStatus::kVerified), 8u);
  ASSERT_TRUE(r.conclusion.has_value());
  EXPECT_EQ(r.conclusion->identity, Identity("yxyxx"_w, "yxxyx"_w));
  const Check* c2 = r.find("2");
  ASSERT_NE(c2, nullptr);
  const auto& ev = std::get<ClassEvidence>(c2->evidence.at(0));
  EXPECT_EQ(ev.members, (WordSet{"xyxyx"_w, "yxyxx"_w}));
  EXPECT_NE(format_report(r).find("CONCLUSION: V ∨ (Y ∧ X) ⊂ Y ∧ (V ∨ X)"), std::string::npos);
}

TEST(Scenarios, S2Details) {
  Report r = run_scenario("S2");
  const auto& cert = std::get<CertificateEvidence>(r.find("4")->evidence.at(0)).certificate;
  EXPECT_LE(cert.length(), 3u);
  EXPECT_EQ(cert.start, "x^9yx^3"_w);
  EXPECT_EQ(cert.end, "x^7yx^5"_w);
  const auto& c1 = std::get<ClassEvidence>(r.find("1")->evidence.at(0));
  EXPECT_EQ(c1.members, (WordSet{"x^9yx^3"_w, "x^6yx^7"_w}));
}

TEST(Reports, StatusRules) {
  Report r;
  EXPECT_EQ(r.status(), ReportStatus::kFail);
  Check ok{"1", "a", CheckStatus::kVerified, {PowerFreeEvidence{{"xy"_w}, 2}}, {}};
  r.checks.push_back(ok);
  EXPECT_EQ(r.status(), ReportStatus::kPass);
  r.checks.push_back(Check{"2", "b", CheckStatus::kAssumed, {Assumption{"s", "t"}}, {}});
  EXPECT_EQ(r.status(), ReportStatus::kPassWithAssumptions);
  StrictInclusion s;
  s.identity = Identity("x"_w, "x"_w);
  s.holds_by = {"2"};
  r.conclusion = s;
  EXPECT_EQ(r.status(), ReportStatus::kFail);
  r.conclusion.reset();
  r.checks.push_back(Check{"3", "c", CheckStatus::kFailed, {}, "no"});
  EXPECT_EQ(r.status(), ReportStatus::kFail);
}

TEST(Reports, ReplayRejectsForgedEvidence) {
  EXPECT_FALSE(replay(PowerFreeEvidence{{"xyxy"_w}, 2}));
  EXPECT_FALSE(replay(ClassEvidence{kSigmaE, "x"_w, {"x"_w, "y"_w}}));
  EXPECT_FALSE(replay(SatisfiesEvidence{VarietyHandle::builtin(BuiltinVariety::kLeftRegularBand),
                                        Identity("xy"_w, "yx"_w), Verdict::yes()}));
  EXPECT_FALSE(replay(Assumption{"anything", "nowhere"}));
  EXPECT_FALSE(replay(ShapeEvidence{"xyxy"_w, "xyyx"_w, 2}));
  DerivationCertificate bogus{"xy"_w, "yx"_w, {}};
  EXPECT_FALSE(replay(CertificateEvidence{kSigmaE, bogus}));
}

TEST(Scenarios, UnknownName) { EXPECT_THROW(run_scenario("S9"), std::invalid_argument); }

}  // namespace
