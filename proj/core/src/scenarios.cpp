#include <stdexcept>

#include "monvar/shaping.hpp"
#include "monvar/verifier.hpp"

namespace monvar {

namespace {

const Variable kX('x');
const Variable kY('y');
const Variable kT('t');

Check make_check(std::string id, std::string description) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  return c;
}

void mark(Check& c, bool ok, std::string detail = {}) {
  c.status = ok ? CheckStatus::kVerified : CheckStatus::kFailed;
  if (!ok) c.detail = std::move(detail);
}

Check satisfies_check(std::string id, std::string description,
                      const std::vector<std::pair<VarietyHandle, Identity>>& queries,
                      Verdict expected) {
  Check c = make_check(std::move(id), std::move(description));
  bool ok = true;
  for (const auto& [variety, identity] : queries) {
    Verdict answer = satisfies(variety, identity);
    c.evidence.push_back(SatisfiesEvidence{variety, identity, answer});
    if (answer != expected) {
      ok = false;
      c.detail = variety.describe() + " answered " + to_string(answer) + " for " +
                 format_identity(identity) + ", expected " + to_string(expected);
    }
  }
  mark(c, ok, c.detail);
  return c;
}

Check exact_class_check(std::string id, std::string description, const Presentation& sigma,
                        const WordSet& members, const Word& w) {
  Check c = make_check(std::move(id), std::move(description));
  ClassVerdict verdict = class_closure_verify(members, w, sigma);
  if (is_exact_class(verdict)) {
    c.evidence.push_back(ClassEvidence{sigma, w, members});
    mark(c, true);
  } else if (auto* nc = std::get_if<NotClosed>(&verdict)) {
    mark(c, false, format_word(nc->member) + " rewrites to " +
                       format_word(nc->escaping_successor) + " outside the set");
  } else if (auto* nr = std::get_if<NotConnected>(&verdict)) {
    mark(c, false, format_word(nr->unreached_member) + " is not reachable");
  } else {
    mark(c, false, "system is not content-balanced");
  }
  return c;
}

Check isoterm_check(std::string id, std::string description, const VarietyHandle& variety,
                    const std::vector<Word>& words) {
  Check c = make_check(std::move(id), std::move(description));
  bool ok = true;
  for (const auto& w : words) {
    Verdict answer = isoterm_for(variety, w);
    c.evidence.push_back(IsotermEvidence{variety, w, answer});
    if (!answer.is_yes()) {
      ok = false;
      c.detail = format_word(w) + ": " + to_string(answer);
    }
  }
  mark(c, ok, c.detail);
  return c;
}

Check derive_check(std::string id, std::string description, const Presentation& sigma,
                   const Word& u, const Word& v) {
  Check c = make_check(std::move(id), std::move(description));
  DeriveResult result = derive(sigma, u, v);
  if (auto* proved = std::get_if<Proved>(&result)) {
    c.evidence.push_back(CertificateEvidence{sigma, proved->certificate});
    mark(c, accepted(verify_certificate(sigma, proved->certificate)),
         "certificate failed to replay");
  } else {
    mark(c, false, "no derivation found within the default bounds");
  }
  return c;
}

std::string eq(const Word& u, const Word& v) { return format_word(u) + " = " + format_word(v); }

Report scenario_s1() {
  Report r;
  r.scenario = "S1";
  r.title = "a proper variety containing LRB is not lower-modular (V = LRB, n = 2)";

  const VarietyHandle lrb = VarietyHandle::builtin(BuiltinVariety::kLeftRegularBand);
  const Substitution swap{{kX, Word{kY}}, {kY, Word{kX}}};
  const Word x{kX};
  const Word u = "xyxy"_w;
  const Word v = "xyyx"_w;
  const Word u_ = swap.apply(u);
  const Word v_ = swap.apply(v);
  const Word ux = u * x, u_x = u_ * x, vx = v * x, v_x = v_ * x;

  const Presentation sigma_x{Identity(ux, u_x), Identity(vx, v_x)};
  const Presentation sigma_y{Identity(ux, vx)};
  const VarietyHandle X = VarietyHandle::presented(sigma_x, "X");
  const VarietyHandle Y = VarietyHandle::presented(sigma_y, "Y");
  const VarietyHandle v_join_x = VarietyHandle::join({lrb, X});
  const Presentation sigma_xy = Presentation::merged(sigma_y, sigma_x);

  r.checks.push_back(satisfies_check("1", "V = LRB satisfies u = v, " + eq(u, v),
                                     {{lrb, Identity(u, v)}}, Verdict::yes()));
  r.checks.push_back(exact_class_check("2", "{ux, u'x} is a class of X", sigma_x, {ux, u_x}, ux));
  r.checks.push_back(exact_class_check("3", "{vx, v'x} is a class of X", sigma_x, {vx, v_x}, vx));
  {
    Check c = make_check("4", "u'x = " + format_word(u_x) + " is an isoterm for Y");
    bool iso = isoterm_exact(u_x, sigma_y);
    if (iso) c.evidence.push_back(ClassEvidence{sigma_y, u_x, {u_x}});
    mark(c, iso, "u'x has a one-step successor modulo Y");
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(satisfies_check("5", "V satisfies ux = vx, so V ⊆ Y",
                                     {{lrb, Identity(ux, vx)}}, Verdict::yes()));
  r.checks.push_back(isoterm_check("6", "ux, u'x, vx, v'x are isoterms for V ∨ X", v_join_x,
                                   {ux, u_x, vx, v_x}));
  {
    Check c = derive_check("7", "u'x = v'x holds in Y ∧ X and in V, hence in V ∨ (Y ∧ X)",
                           sigma_xy, u_x, v_x);
    Verdict in_v = satisfies(lrb, Identity(u_x, v_x));
    c.evidence.push_back(SatisfiesEvidence{lrb, Identity(u_x, v_x), in_v});
    if (c.status == CheckStatus::kVerified && !in_v.is_yes()) {
      mark(c, false, "V does not satisfy u'x = v'x");
    }
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(isoterm_check("8", "u'x is an isoterm for Y ∧ (V ∨ X)",
                                   VarietyHandle::meet({Y, v_join_x}), {u_x}));

  StrictInclusion s;
  s.lower = "V ∨ (Y ∧ X)";
  s.upper = "Y ∧ (V ∨ X)";
  s.identity = Identity(u_x, v_x);
  s.holds_by = {"7"};
  s.fails_by = {"8"};
  s.includes_by = {"5"};
  s.argument =
      "The theory of a join is the intersection of the theories, and every consequence of\n"
      "Y ∪ X holds in Y ∧ X; so check 7 puts " + eq(u_x, v_x) + " in the theory of V ∨ (Y ∧ X).\n"
      "Check 8 says " + format_word(u_x) + " is alone in its class for Y ∧ (V ∨ X), so the\n"
      "identity fails there. V ⊆ Y (check 5) gives V ∨ (Y ∧ X) ⊆ Y ∧ (V ∨ X); the two differ,\n"
      "so V = LRB is not a lower-modular element.";
  r.conclusion = std::move(s);
  return r;
}

Report scenario_s2() {
  Report r;
  r.scenario = "S2";
  r.title = "completely regular V containing a non-trivial group (m = 2, V = var{x = x^3})";
  constexpr std::size_t m = 2;
  auto word = [](std::size_t a, std::size_t b) {
    return power(Word{kX}, a) * Word{kY} * power(Word{kX}, b);
  };
  const Word u1 = word(4 * m + 1, m + 1);
  const Word u2 = word(2 * m + 2, 3 * m + 1);
  const Word v1 = word(3 * m + 1, 2 * m + 1);
  const Word v2 = word(m + 2, 4 * m + 1);
  const Presentation sigma_x{Identity(u1, u2), Identity(v1, v2)};
  const Presentation sigma_y{Identity(u2, v2)};
  const Presentation sigma_v{Identity(Word{kX}, power(Word{kX}, m + 1))};

  r.checks.push_back(exact_class_check("1", "{u1, u2} is a class of X", sigma_x, {u1, u2}, u1));
  r.checks.push_back(exact_class_check("2", "{v1, v2} is a class of X", sigma_x, {v1, v2}, v1));
  {
    Check c = make_check("3", "u1 = " + format_word(u1) + " is an isoterm for Y");
    bool iso = isoterm_exact(u1, sigma_y);
    if (iso) c.evidence.push_back(ClassEvidence{sigma_y, u1, {u1}});
    mark(c, iso, "u1 has a one-step successor modulo Y");
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(derive_check("4", "u1 = v1 follows from x = x^" + std::to_string(m + 1),
                                  sigma_v, u1, v1));
  r.checks.push_back(derive_check("5", "u1 = v1 holds in Y ∧ X",
                                  Presentation::merged(sigma_y, sigma_x), u1, v1));
  {
    const std::size_t k = 5 * m + 2;
    Check c = make_check("6", "neither u1 nor u2 has a factor that is a " + std::to_string(k) +
                                  "th power of a non-empty word");
    bool clean = !contains_power_factor(u1, k) && !contains_power_factor(u2, k);
    if (clean) c.evidence.push_back(PowerFreeEvidence{{u1, u2}, k});
    mark(c, clean, "a forbidden power occurs");
    r.checks.push_back(std::move(c));
  }
  r.notes.push_back(
      "u1, u2, v1, v2 are isoterms for V ∨ X only if V violates u1 = u2 and v1 = v2; that "
      "step is a statement about combinatorial varieties and is not part of this check list.");
  return r;
}

Report scenario_s3() {
  Report r;
  r.scenario = "S3";
  r.title = "V not completely regular with E ⊆ V (V = E, k = 2)";
  const Presentation sigma_e = *[] {
    return std::optional<Presentation>(Presentation{
        Identity("x^2"_w, "x^3"_w), Identity("x^2y"_w, "xyx"_w), Identity("x^2y^2"_w, "y^2x^2"_w)});
  }();
  const VarietyHandle c_var = VarietyHandle::builtin(BuiltinVariety::kCommutativeC);
  const VarietyHandle lrb = VarietyHandle::builtin(BuiltinVariety::kLeftRegularBand);

  constexpr std::size_t k = 2;
  Word u, v;
  {
    Check c = make_check("1", "E satisfies an identity u = v with content {x,y}, all "
                              "occurrence counts 2, no x^2 or y^2 factor, ini(u) != ini(v)");
    auto found = find_shaped_identity(sigma_e, k);
    if (auto* s = std::get_if<ShapedIdentity>(&found)) {
      u = s->u;
      v = s->v;
      c.evidence.push_back(CertificateEvidence{sigma_e, s->certificate});
      c.evidence.push_back(ShapeEvidence{u, v, k});
      mark(c, accepted(verify_certificate(sigma_e, s->certificate)) &&
                  !shape_violation(u, v, k),
           "shaped identity did not re-verify");
    } else {
      mark(c, false, "no shaped identity found within bounds");
    }
    r.checks.push_back(std::move(c));
  }
  if (r.checks.back().status != CheckStatus::kVerified) return r;

  const Word xt{kX, kT}, tx{kT, kX};
  const Word xtu = xt * u, txu = tx * u, xtv = xt * v, txv = tx * v;
  const Presentation sigma_x{Identity(xtu, txu), Identity(xtv, txv)};
  const Presentation sigma_y{Identity(txu, txv)};

  r.checks.push_back(exact_class_check("2", "{xtu, txu} is a class of X", sigma_x, {xtu, txu}, xtu));
  r.checks.push_back(exact_class_check("3", "{xtv, txv} is a class of X", sigma_x, {xtv, txv}, xtv));
  {
    Check c = make_check("4", "xtu = " + format_word(xtu) + " is an isoterm for Y");
    bool iso = isoterm_exact(xtu, sigma_y);
    if (iso) c.evidence.push_back(ClassEvidence{sigma_y, xtu, {xtu}});
    mark(c, iso, "xtu has a one-step successor modulo Y");
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(derive_check("5", "xtu = xtv holds in Y ∧ X",
                                  Presentation::merged(sigma_y, sigma_x), xtu, xtv));
  const auto& ids = sigma_e.identities();
  r.checks.push_back(satisfies_check("6", "C satisfies x^2 = x^3 and x^2y = xyx",
                                     {{c_var, ids[0]}, {c_var, ids[1]}}, Verdict::yes()));
  r.checks.push_back(satisfies_check("7", "LRB satisfies x^2 = x^3 and x^2y = xyx",
                                     {{lrb, ids[0]}, {lrb, ids[1]}}, Verdict::yes()));
  r.checks.push_back(satisfies_check("8", "LRB violates x^2y^2 = y^2x^2", {{lrb, ids[2]}},
                                     Verdict::no()));
  {
    Check c = make_check("9", "xtu and txu lie in different classes of every V ⊇ E");
    c.status = CheckStatus::kAssumed;
    c.evidence.push_back(Assumption{
        "for every monoid variety V containing E, " + format_word(xtu) + " and " +
            format_word(txu) + " are not V-equivalent",
        "external result; E has no decider here"});
    r.checks.push_back(std::move(c));
  }
  r.notes.push_back("out of scope: the strict inclusion E ⊂ C ∨ LRB is not checked.");
  r.notes.push_back(
      "checks 6-8 record which defining identities of E pass the C and LRB deciders.");
  return r;
}

Report scenario_s4() {
  Report r;
  r.scenario = "S4";
  r.title = "implications between special element types on the lattice catalog";
  const auto catalog = builtin_catalog();

  auto catalog_check = [&](std::string id, std::string description, CatalogCheck kind,
                           auto holds) {
    Check c = make_check(std::move(id), std::move(description));
    for (const auto& L : catalog) {
      if (!holds(L)) {
        mark(c, false, "fails on " + L.name());
        return c;
      }
    }
    c.evidence.push_back(CatalogEvidence{kind, catalog.size()});
    mark(c, true);
    return c;
  };

  r.checks.push_back(catalog_check(
      "1",
      "neutral => standard, costandard; [co]standard => cancellable, [co]distributive; "
      "cancellable => modular; distributive => lower-modular; codistributive => upper-modular",
      CatalogCheck::kImplications, [](const FiniteLattice& L) { return check_implications(L).ok(); }));
  r.checks.push_back(catalog_check("2", "neutral elements form a sublattice",
                                   CatalogCheck::kNeutralSublattice, [](const FiniteLattice& L) {
                                     return is_sublattice(L, elements_with(L, ElementProperty::kNeutral));
                                   }));
  r.checks.push_back(catalog_check("3", "standard elements form a sublattice",
                                   CatalogCheck::kStandardSublattice, [](const FiniteLattice& L) {
                                     return is_sublattice(L, elements_with(L, ElementProperty::kStandard));
                                   }));
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() { return {"S1", "S2", "S3", "S4"}; }

Report run_scenario(std::string_view name) {
  if (name == "S1") return scenario_s1();
  if (name == "S2") return scenario_s2();
  if (name == "S3") return scenario_s3();
  if (name == "S4") return scenario_s4();
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected S1, S2, S3 or S4)");
}

}  // namespace monvar
