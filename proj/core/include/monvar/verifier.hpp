#pragma once

// Scripted verification scenarios and their reports.
//
// Each scenario is a fixed list of checks. Every verified check carries
// evidence that can be recomputed independently of the run that produced it.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monvar/identity.hpp"
#include "monvar/lattice.hpp"
#include "monvar/rewrite.hpp"
#include "monvar/variety.hpp"

namespace monvar {

struct CertificateEvidence {
  Presentation sigma;
  DerivationCertificate certificate;
};

/// `members` is exactly the class of `word` modulo sigma.
struct ClassEvidence {
  Presentation sigma;
  Word word;
  WordSet members;
};

struct SatisfiesEvidence {
  VarietyHandle variety;
  Identity identity;
  Verdict answer;
};

struct IsotermEvidence {
  VarietyHandle variety;
  Word word;
  Verdict answer;
};

/// None of `words` has a factor z^k with z non-empty.
struct PowerFreeEvidence {
  std::vector<Word> words;
  std::size_t k;
};

/// u ≈ v passes shape_violation(u, v, k).
struct ShapeEvidence {
  Word u;
  Word v;
  std::size_t k;
};

enum class CatalogCheck { kImplications, kNeutralSublattice, kStandardSublattice };

/// The check holds on every lattice of builtin_catalog().
struct CatalogEvidence {
  CatalogCheck check;
  std::size_t lattices;
};

struct Assumption {
  std::string statement;
  std::string source;
};

using Evidence = std::variant<CertificateEvidence, ClassEvidence, SatisfiesEvidence,
                              IsotermEvidence, PowerFreeEvidence, ShapeEvidence,
                              CatalogEvidence, Assumption>;

enum class CheckStatus { kVerified, kFailed, kAssumed };
std::string_view to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::kFailed;
  std::vector<Evidence> evidence;
  std::string detail;  // why a check failed
};

/// lower ⊂ upper, witnessed by an identity that holds in `lower` (checks
/// `holds_by`) and fails in `upper` (checks `fails_by`); `includes_by`
/// gives lower ⊆ upper.
struct StrictInclusion {
  std::string lower;
  std::string upper;
  Identity identity;
  std::vector<std::string> holds_by;
  std::vector<std::string> fails_by;
  std::vector<std::string> includes_by;
  std::string argument;
};

enum class ReportStatus { kPass, kFail, kPassWithAssumptions };
std::string_view to_string(ReportStatus s);

struct Report {
  std::string scenario;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::optional<StrictInclusion> conclusion;

  /// PASS: every check verified. PASS_WITH_ASSUMPTIONS: every check verified
  /// or assumed, at least one assumed. FAIL otherwise, including a
  /// conclusion that cites a check which is not verified.
  ReportStatus status() const;
  std::size_t count(CheckStatus s) const;
  const Check* find(std::string_view id) const;
};

/// Plain text: "CHECK <id>: <description> ... VERIFIED|FAILED|ASSUMED"
/// per check, each followed by an indented evidence block.
std::string format_report(const Report& report);

/// Recomputes one piece of evidence. Assumptions never replay.
bool replay(const Evidence& evidence);
/// Every verified check's evidence replays.
bool replay_report(const Report& report);

/// "S1", "S2", "S3", "S4".
std::vector<std::string> scenario_names();
/// Throws std::invalid_argument for an unknown name.
Report run_scenario(std::string_view name);

}  // namespace monvar
