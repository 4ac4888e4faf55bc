#pragma once

// Varieties as queryable values: exact deciders for a few well-known
// varieties, presentation-backed varieties, and meets/joins of those.
//
// Reasoning about composites uses two facts. The equational theory of a join
// is the intersection of the theories of its components. The fully invariant
// congruence of a meet is generated by the union of its components'
// congruences.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monvar/identity.hpp"
#include "monvar/rewrite.hpp"
#include "monvar/word.hpp"

namespace monvar {

enum class BuiltinVariety {
  kTrivial,          // T
  kSemilattice,      // SL = var{x² ≈ x, xy ≈ yx}
  kCommutativeC,     // C = var{x² ≈ x³, xy ≈ yx}
  kLeftRegularBand,  // LRB = var{xy ≈ xyx}
  kRightRegularBand  // RRB = var{xy ≈ yxy}
};

std::string_view name_of(BuiltinVariety b);

/// Defining identities of a builtin variety. T has none that the rewrite
/// engine can use ({x ≈ y} is not content-balanced), so it returns nullopt.
std::optional<Presentation> reference_presentation(BuiltinVariety b);

enum class UnknownReason { kBounds, kComposition };

class Verdict {
 public:
  enum class Kind { kYes, kNo, kUnknown };

  static Verdict yes() { return Verdict(Kind::kYes, std::nullopt); }
  static Verdict no() { return Verdict(Kind::kNo, std::nullopt); }
  static Verdict unknown(UnknownReason r) { return Verdict(Kind::kUnknown, r); }
  static Verdict from_bool(bool b) { return b ? yes() : no(); }

  Kind kind() const { return kind_; }
  bool is_yes() const { return kind_ == Kind::kYes; }
  bool is_no() const { return kind_ == Kind::kNo; }
  bool is_unknown() const { return kind_ == Kind::kUnknown; }
  std::optional<UnknownReason> reason() const { return reason_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(Kind k, std::optional<UnknownReason> r) : kind_(k), reason_(r) {}
  Kind kind_;
  std::optional<UnknownReason> reason_;
};

/// "Yes", "No", "Unknown(bounds)" or "Unknown(composition)".
std::string to_string(const Verdict& v);

class VarietyHandle {
 public:
  enum class Kind { kBuiltin, kPresented, kMeet, kJoin };

  static VarietyHandle builtin(BuiltinVariety b);
  static VarietyHandle presented(Presentation sigma, std::string label = {});
  /// The variety of all monoids, as Presented(∅).
  static VarietyHandle all_monoids();
  /// Throw std::invalid_argument on an empty component list.
  static VarietyHandle meet(std::vector<VarietyHandle> components);
  static VarietyHandle join(std::vector<VarietyHandle> components);

  Kind kind() const { return kind_; }
  /// Precondition: kind() == kBuiltin.
  BuiltinVariety builtin_kind() const { return builtin_; }
  /// Precondition: kind() == kPresented.
  const Presentation& presentation() const { return *sigma_; }
  std::span<const VarietyHandle> components() const { return components_; }

  /// Expression form, e.g. "join(LRB,@x.ids)".
  std::string describe() const;

 private:
  VarietyHandle() = default;

  Kind kind_ = Kind::kPresented;
  BuiltinVariety builtin_ = BuiltinVariety::kTrivial;
  std::shared_ptr<const Presentation> sigma_;
  std::string label_;
  std::vector<VarietyHandle> components_;
};

/// Variables sorted by token order, each raised to min(occurrences, 2).
/// Two words are equal in C exactly when their normal forms coincide.
Word c_normal_form(const Word& w);

/// Does the variety satisfy the identity? Builtins answer exactly. Presented
/// varieties answer Yes on a found derivation and Unknown otherwise. When
/// `bounds` is empty, SearchBounds::defaults_for is used per query.
Verdict satisfies(const VarietyHandle& h, const Identity& id,
                  const std::optional<SearchBounds>& bounds = std::nullopt);

/// Is w alone in its class modulo the variety's fully invariant congruence?
Verdict isoterm_for(const VarietyHandle& h, const Word& w,
                    const std::optional<SearchBounds>& bounds = std::nullopt);

struct Found {
  std::size_t n;
};
struct NoneWithinBounds {};
using WitnessResult = std::variant<Found, NoneWithinBounds>;

/// Least n <= n_max with x ≈ x^{1+n} derivable from sigma.
WitnessResult completely_regular_witness(const Presentation& sigma, std::size_t n_max,
                                         const std::optional<SearchBounds>& bounds =
                                             std::nullopt);

/// Least n <= n_max with x^n ≈ x^{n+1} derivable from sigma.
WitnessResult combinatorial_witness(const Presentation& sigma, std::size_t n_max,
                                    const std::optional<SearchBounds>& bounds =
                                        std::nullopt);

/// Parses the handle expression syntax: T, SL, C, LRB, RRB, MON,
/// "@path/to/file.ids", meet(...), join(...). Presentation files are read
/// relative to the working directory. Throws ParseError.
VarietyHandle parse_variety(std::string_view expr);

}  // namespace monvar
