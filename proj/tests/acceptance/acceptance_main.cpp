// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monvar/certificate.hpp"
#include "monvar/lattice.hpp"
#include "monvar/matching.hpp"
#include "monvar/verifier.hpp"
#include "oracles.hpp"

using namespace monvar;

namespace {

constexpr double kS1Seconds = 10.0;
constexpr double kS2Seconds = 30.0;
constexpr double kDeciderSeconds = 120.0;
constexpr double kLatticeSeconds = 60.0;
constexpr std::size_t kDeciderWordLength = 4;
constexpr SearchBounds kDeciderBounds{10, 8, 1'000'000};
constexpr int kMatcherTrials = 1000;
constexpr std::size_t kMaxCertificateLengthS2 = 3;

struct Certified {
  Presentation sigma;
  DerivationCertificate certificate;
};

// Every Proved result produced below, replayed by certificate_integrity().
std::vector<Certified> g_proofs;

void collect(const Report& r) {
  for (const auto& c : r.checks) {
    for (const auto& e : c.evidence) {
      if (auto* ce = std::get_if<CertificateEvidence>(&e)) g_proofs.push_back({ce->sigma, ce->certificate});
    }
  }
}

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void criterion(int n, const std::string& name, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++g_failures;
  std::printf("CRITERION %d %s: %s (%.3f s) %s\n", n, o.pass ? "PASS" : "FAIL", name.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome scenario_s1() {
  auto t = std::chrono::steady_clock::now();
  Report r = run_scenario("S1");
  double secs = seconds_since(t);
  collect(r);
  auto cls = [&](const char* id, WordSet expected) {
    const Check* c = r.find(id);
    if (!c || c->status != CheckStatus::kVerified) return false;
    auto* ev = std::get_if<ClassEvidence>(&c->evidence.at(0));
    return ev && ev->members == expected;
  };
  bool ok = r.status() == ReportStatus::kPass && r.checks.size() == 8 &&
            r.count(CheckStatus::kVerified) == 8 && cls("2", {"xyxyx"_w, "yxyxx"_w}) &&
            cls("3", {"xyyxx"_w, "yxxyx"_w}) && r.conclusion.has_value() &&
            format_report(r).find("CONCLUSION: ") != std::string::npos && replay_report(r) &&
            secs < kS1Seconds;
  return {ok, "status " + std::string(to_string(r.status())) + ", " +
                  std::to_string(r.count(CheckStatus::kVerified)) + "/8 verified, limit " +
                  std::to_string(static_cast<int>(kS1Seconds)) + " s"};
}

Outcome scenario_s2() {
  auto t = std::chrono::steady_clock::now();
  Report r = run_scenario("S2");
  double secs = seconds_since(t);
  collect(r);
  bool ok = r.status() == ReportStatus::kPass && replay_report(r) && secs < kS2Seconds;

  const Presentation sigma_x{Identity("x^9yx^3"_w, "x^6yx^7"_w), Identity("x^7yx^5"_w, "x^4yx^9"_w)};
  ok = ok && is_exact_class(class_closure_verify({"x^9yx^3"_w, "x^6yx^7"_w}, "x^9yx^3"_w, sigma_x));
  ok = ok && is_exact_class(class_closure_verify({"x^7yx^5"_w, "x^4yx^9"_w}, "x^7yx^5"_w, sigma_x));
  const Presentation cube{Identity("x"_w, "x^3"_w)};
  auto d = derive(cube, "x^9yx^3"_w, "x^7yx^5"_w);
  std::size_t len = 0;
  if (auto* p = std::get_if<Proved>(&d)) {
    len = p->certificate.length();
    g_proofs.push_back({cube, p->certificate});
  } else {
    ok = false;
  }
  ok = ok && len <= kMaxCertificateLengthS2;
  ok = ok && isoterm_exact("x^9yx^3"_w, Presentation{Identity("x^6yx^7"_w, "x^4yx^9"_w)});
  ok = ok && !contains_power_factor("x^9yx^3"_w, 12) && !contains_power_factor("x^6yx^7"_w, 12);
  return {ok, "status " + std::string(to_string(r.status())) + ", derivation length " +
                  std::to_string(len) + ", limit " + std::to_string(static_cast<int>(kS2Seconds)) +
                  " s"};
}

Outcome scenario_s3() {
  Report r = run_scenario("S3");
  collect(r);
  std::size_t assumed = r.count(CheckStatus::kAssumed);
  bool ok = r.status() == ReportStatus::kPassWithAssumptions && assumed == 1 &&
            r.count(CheckStatus::kFailed) == 0 &&
            r.count(CheckStatus::kVerified) + 1 == r.checks.size() && replay_report(r);
  const Check* c1 = r.find("1");
  bool shaped = false;
  if (c1 && c1->status == CheckStatus::kVerified) {
    for (const auto& e : c1->evidence) {
      if (auto* s = std::get_if<ShapeEvidence>(&e)) shaped = ini(s->u) != ini(s->v);
    }
  }
  return {ok && shaped, "status " + std::string(to_string(r.status())) + ", " +
                            std::to_string(assumed) + " assumption(s)"};
}

Outcome decider_oracle() {
  auto t = std::chrono::steady_clock::now();
  auto words = oracle::all_words({Variable('x'), Variable('y')}, kDeciderWordLength);
  std::size_t pairs = 0, contradictions = 0, unconfirmed = 0, certified = 0;
  for (auto kind : {BuiltinVariety::kSemilattice, BuiltinVariety::kCommutativeC,
                    BuiltinVariety::kLeftRegularBand, BuiltinVariety::kRightRegularBand}) {
    auto handle = VarietyHandle::builtin(kind);
    Presentation sigma = *reference_presentation(kind);
    for (const auto& u : words) {
      SearchTree tree(sigma, u, kDeciderBounds);
      for (const auto& v : words) {
        ++pairs;
        bool yes = satisfies(handle, Identity(u, v)).is_yes();
        bool reached = tree.contains(v);
        if (reached && !yes) ++contradictions;
        if (yes && !reached) ++unconfirmed;
        if (reached) {
          g_proofs.push_back({sigma, *tree.certificate_to(v)});
          ++certified;
        }
      }
    }
  }
  double secs = seconds_since(t);
  bool ok = contradictions == 0 && unconfirmed == 0 && secs < kDeciderSeconds;
  return {ok, std::to_string(pairs) + " pairs, " + std::to_string(contradictions) +
                  " contradictions, " + std::to_string(unconfirmed) + " unconfirmed Yes, " +
                  std::to_string(certified) + " certificates, limit " +
                  std::to_string(static_cast<int>(kDeciderSeconds)) + " s"};
}

Outcome matcher_oracle() {
  std::mt19937 rng(20261019);
  const Variable x('x'), y('y'), z('z');
  int discrepancies = 0;
  for (int i = 0; i < kMatcherTrials; ++i) {
    Word pattern = oracle::random_word(rng, {x, y}, 0, 4);
    Word target = oracle::random_word(rng, {x, y, z}, 0, 5);
    auto got = match_pattern(pattern, target);
    if (std::set<Substitution>(got.begin(), got.end()) != oracle::matches(pattern, target)) {
      ++discrepancies;
    }
  }
  return {discrepancies == 0, std::to_string(kMatcherTrials) + " pairs, " +
                                  std::to_string(discrepancies) + " discrepancies"};
}

Outcome lattice_suite() {
  auto t = std::chrono::steady_clock::now();
  auto catalog = builtin_catalog();
  std::size_t failures = 0;
  for (const auto& L : catalog) {
    if (!check_implications(L).ok()) ++failures;
    if (!is_sublattice(L, elements_with(L, ElementProperty::kNeutral))) ++failures;
    if (!is_sublattice(L, elements_with(L, ElementProperty::kStandard))) ++failures;
    if (!has_property(L, L.bottom(), ElementProperty::kNeutral)) ++failures;
    if (!has_property(L, L.top(), ElementProperty::kNeutral)) ++failures;
    auto D = L.dual();
    for (std::size_t e = 0; e < L.size(); ++e) {
      for (auto p : kAllProperties) {
        if (has_property(L, e, p) != has_property(D, e, dual_of(p))) ++failures;
      }
    }
  }
  auto m = m3();
  auto dist = labels_with(m, ElementProperty::kDistributive);
  if (dist != std::vector<std::string>{"0", "1"}) ++failures;
  double secs = seconds_since(t);
  return {failures == 0 && secs < kLatticeSeconds,
          std::to_string(catalog.size()) + " lattices, " + std::to_string(failures) +
              " failures, limit " + std::to_string(static_cast<int>(kLatticeSeconds)) + " s"};
}

Outcome certificate_integrity() {
  std::size_t bad = 0;
  for (const auto& [sigma, cert] : g_proofs) {
    if (!accepted(verify_certificate(sigma, cert))) ++bad;
    if (!accepted(verify_certificate(sigma, parse_certificate(serialize_certificate(cert))))) ++bad;
  }
  return {bad == 0 && !g_proofs.empty(),
          std::to_string(g_proofs.size()) + " certificates, " + std::to_string(bad) +
              " rejected (direct or after round-trip)"};
}

}  // namespace

int main() {
  criterion(1, "scenario S1", scenario_s1);
  criterion(2, "scenario S2", scenario_s2);
  criterion(3, "scenario S3", scenario_s3);
  criterion(4, "decider/oracle equivalence", decider_oracle);
  criterion(5, "matcher vs brute force", matcher_oracle);
  criterion(6, "lattice suite", lattice_suite);
  criterion(7, "certificate integrity", certificate_integrity);
  std::printf("%s: %d criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures ? 1 : 0;
}
