#include <algorithm>
#include <sstream>

#include "monvar/certificate.hpp"
#include "monvar/shaping.hpp"
#include "monvar/verifier.hpp"

namespace monvar {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string format_system(const Presentation& sigma) {
  std::string out = "{";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(i) + "] " + format_identity(sigma[i]);
  }
  return out + "}";
}

std::string format_set(const WordSet& words) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : words) {
    if (!first) out += ", ";
    first = false;
    out += format_word(w);
  }
  return out + "}";
}

std::string_view catalog_check_name(CatalogCheck c) {
  switch (c) {
    case CatalogCheck::kImplications: return "element-type implications";
    case CatalogCheck::kNeutralSublattice: return "neutral elements form a sublattice";
    case CatalogCheck::kStandardSublattice: return "standard elements form a sublattice";
  }
  return "?";
}

bool catalog_holds(CatalogCheck check, const FiniteLattice& L) {
  switch (check) {
    case CatalogCheck::kImplications: return check_implications(L).ok();
    case CatalogCheck::kNeutralSublattice:
      return is_sublattice(L, elements_with(L, ElementProperty::kNeutral));
    case CatalogCheck::kStandardSublattice:
      return is_sublattice(L, elements_with(L, ElementProperty::kStandard));
  }
  return false;
}

void format_evidence(std::ostringstream& out, const Evidence& evidence) {
  std::visit(
      Overloaded{
          [&](const CertificateEvidence& e) {
            out << "    certificate, " << e.certificate.length() << " step(s), system "
                << format_system(e.sigma) << ":\n";
            std::istringstream lines(describe_certificate(e.certificate, e.sigma));
            for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
          },
          [&](const ClassEvidence& e) {
            out << "    class of " << format_word(e.word) << " modulo " << format_system(e.sigma)
                << " is exactly " << format_set(e.members)
                << " (closed under one-step rewriting, connected)\n";
          },
          [&](const SatisfiesEvidence& e) {
            out << "    " << e.variety.describe() << " satisfies " << format_identity(e.identity)
                << ": " << to_string(e.answer) << "\n";
          },
          [&](const IsotermEvidence& e) {
            out << "    " << format_word(e.word) << " is an isoterm for " << e.variety.describe()
                << ": " << to_string(e.answer) << "\n";
          },
          [&](const PowerFreeEvidence& e) {
            out << "    no factor z^" << e.k << " (z non-empty) in";
            for (const auto& w : e.words) out << " " << format_word(w);
            out << "\n";
          },
          [&](const ShapeEvidence& e) {
            out << "    " << format_word(e.u) << " = " << format_word(e.v)
                << ": content {x,y}, every occurrence count " << e.k << ", no x^" << e.k
                << " or y^" << e.k << " factor, ini " << format_word(ini(e.u)) << " vs "
                << format_word(ini(e.v)) << "\n";
          },
          [&](const CatalogEvidence& e) {
            out << "    " << catalog_check_name(e.check) << ": holds on all " << e.lattices
                << " catalog lattices\n";
          },
          [&](const Assumption& e) {
            out << "    assumption: " << e.statement << " [" << e.source << "]\n";
          },
      },
      evidence);
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kVerified: return "VERIFIED";
    case CheckStatus::kFailed: return "FAILED";
    case CheckStatus::kAssumed: return "ASSUMED";
  }
  return "?";
}

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::kPass: return "PASS";
    case ReportStatus::kFail: return "FAIL";
    case ReportStatus::kPassWithAssumptions: return "PASS_WITH_ASSUMPTIONS";
  }
  return "?";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ReportStatus Report::status() const {
  if (checks.empty() || count(CheckStatus::kFailed) > 0) return ReportStatus::kFail;
  if (conclusion) {
    for (const auto* ids : {&conclusion->holds_by, &conclusion->fails_by,
                            &conclusion->includes_by}) {
      for (const auto& id : *ids) {
        const Check* c = find(id);
        if (!c || c->status != CheckStatus::kVerified) return ReportStatus::kFail;
      }
    }
  }
  return count(CheckStatus::kAssumed) > 0 ? ReportStatus::kPassWithAssumptions
                                          : ReportStatus::kPass;
}

std::string format_report(const Report& report) {
  std::ostringstream out;
  out << "SCENARIO " << report.scenario << ": " << report.title << "\n";
  for (const auto& c : report.checks) {
    out << "CHECK " << c.id << ": " << c.description << " ... " << to_string(c.status) << "\n";
    if (!c.detail.empty()) out << "    " << c.detail << "\n";
    for (const auto& e : c.evidence) format_evidence(out, e);
  }
  if (report.conclusion) {
    const auto& s = *report.conclusion;
    auto ids = [](const std::vector<std::string>& v) {
      std::string r;
      for (const auto& id : v) r += (r.empty() ? "" : ", ") + id;
      return r;
    };
    out << "CONCLUSION: " << s.lower << " ⊂ " << s.upper << "\n";
    out << "    identity " << format_identity(s.identity) << "\n";
    out << "    holds in " << s.lower << ": checks " << ids(s.holds_by) << "\n";
    out << "    fails in " << s.upper << ": checks " << ids(s.fails_by) << "\n";
    out << "    " << s.lower << " ⊆ " << s.upper << ": checks " << ids(s.includes_by) << "\n";
    std::istringstream lines(s.argument);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
  for (const auto& note : report.notes) out << "NOTE: " << note << "\n";
  out << "STATUS: " << to_string(report.status()) << "\n";
  return out.str();
}

bool replay(const Evidence& evidence) {
  return std::visit(
      Overloaded{
          [](const CertificateEvidence& e) {
            return accepted(verify_certificate(e.sigma, e.certificate));
          },
          [](const ClassEvidence& e) {
            if (!e.members.contains(e.word)) return false;
            auto verdict = class_closure_verify(e.members, e.word, e.sigma);
            auto* exact = std::get_if<ExactClass>(&verdict);
            return exact && exact->members == e.members;
          },
          [](const SatisfiesEvidence& e) { return satisfies(e.variety, e.identity) == e.answer; },
          [](const IsotermEvidence& e) { return isoterm_for(e.variety, e.word) == e.answer; },
          [](const PowerFreeEvidence& e) {
            return std::none_of(e.words.begin(), e.words.end(),
                                [&](const Word& w) { return contains_power_factor(w, e.k); });
          },
          [](const ShapeEvidence& e) { return !shape_violation(e.u, e.v, e.k).has_value(); },
          [](const CatalogEvidence& e) {
            auto catalog = builtin_catalog();
            return catalog.size() == e.lattices &&
                   std::all_of(catalog.begin(), catalog.end(),
                               [&](const FiniteLattice& L) { return catalog_holds(e.check, L); });
          },
          [](const Assumption&) { return false; },
      },
      evidence);
}

bool replay_report(const Report& report) {
  for (const auto& c : report.checks) {
    if (c.status != CheckStatus::kVerified) continue;
    if (c.evidence.empty()) return false;
    for (const auto& e : c.evidence) {
      if (!replay(e)) return false;
    }
  }
  return true;
}

}  // namespace monvar
