#pragma once

// Explicit finite lattices and brute-force tests for special elements.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monvar {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ElementProperty {
  kNeutral,
  kStandard,
  kCostandard,
  kDistributive,
  kCodistributive,
  kModular,
  kLowerModular,
  kUpperModular,
  kCancellable,
};

inline constexpr std::array<ElementProperty, 9> kAllProperties = {
    ElementProperty::kNeutral,        ElementProperty::kStandard,
    ElementProperty::kCostandard,     ElementProperty::kDistributive,
    ElementProperty::kCodistributive, ElementProperty::kModular,
    ElementProperty::kLowerModular,   ElementProperty::kUpperModular,
    ElementProperty::kCancellable,
};

/// snake_case names: "neutral", "lower_modular", ...
std::string_view to_string(ElementProperty p);
std::optional<ElementProperty> property_from_string(std::string_view name);
/// The order-dual property (standard <-> costandard, ...); neutral, modular
/// and cancellable map to themselves.
ElementProperty dual_of(ElementProperty p);

class FiniteLattice {
 public:
  using Element = std::size_t;
  using Cover = std::pair<std::string, std::string>;  // (lower, upper)

  /// Validates the order generated by `covers` and computes meet and join
  /// tables. Throws LatticeError on duplicate or unknown labels, on a cycle,
  /// and on a pair without a unique least upper or greatest lower bound.
  static FiniteLattice build(std::vector<std::string> elements, std::vector<Cover> covers,
                             std::string name = {});

  std::size_t size() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Throws LatticeError for an unknown label.
  Element at(std::string_view label) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Covering pairs of the order, as element indices.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Same elements, reversed order.
  FiniteLattice dual() const;

 private:
  FiniteLattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

bool has_property(const FiniteLattice& lattice, FiniteLattice::Element x, ElementProperty p);
/// Throws LatticeError on an unknown label.
bool has_property(const FiniteLattice& lattice, std::string_view x, ElementProperty p);

std::vector<FiniteLattice::Element> elements_with(const FiniteLattice& lattice,
                                                  ElementProperty p);
std::vector<std::string> labels_with(const FiniteLattice& lattice, ElementProperty p);

bool is_sublattice(const FiniteLattice& lattice, std::span<const FiniteLattice::Element> subset);

/// True iff the whole lattice satisfies the distributive law.
bool is_distributive_lattice(const FiniteLattice& lattice);

struct ImplicationViolation {
  std::string lattice;
  std::string element;
  ElementProperty has;
  ElementProperty lacks;
};

struct ImplicationReport {
  std::size_t checks = 0;
  std::vector<ImplicationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Known implications between the nine element types, as (premise, conclusion).
std::span<const std::pair<ElementProperty, ElementProperty>> element_implications();

/// Checks every implication on every element.
ImplicationReport check_implications(const FiniteLattice& lattice);

struct ElementWitness {
  std::size_t lattice_index;
  std::string lattice_name;
  FiniteLattice::Element element;
  std::string element_label;
};

/// First (lattice, element), in catalog order, with `has` but not `lacks`.
std::optional<ElementWitness> search_element_counterexample(
    std::span<const FiniteLattice> catalog, ElementProperty has, ElementProperty lacks);

// Constructions and the built-in catalog.

/// Chain with `n` elements 0 < 1 < ... < n-1 (length n - 1).
FiniteLattice chain(std::size_t n);
/// 0 < p, q, r < 1.
FiniteLattice m3();
/// 0 < a < c < 1 and 0 < b < 1.
FiniteLattice n5();
/// Subsets of a k-element set.
FiniteLattice boolean_lattice(std::size_t k);
/// Adjoins a new bottom "_0" and top "_1".
FiniteLattice with_new_bounds(const FiniteLattice& lattice);
/// Componentwise order on pairs labelled "(a,b)".
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

/// Chains of length 0 to 6, M3, N5, B2, B3, M3 and N5 with new bounds, and
/// the products of every pair of the non-trivial ones with at most 36
/// elements.
std::vector<FiniteLattice> builtin_catalog();

// JSON: {"name": optional string, "elements": [labels], "covers": [[lower, upper], ...]}
FiniteLattice parse_lattice_json(std::string_view text);
FiniteLattice load_lattice(const std::string& path);
std::string to_json(const FiniteLattice& lattice);

}  // namespace monvar
