#pragma once

// Helpers that put two-variable identities into the shapes needed by the
// lower-modularity counterexamples.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "monvar/identity.hpp"
#include "monvar/rewrite.hpp"
#include "monvar/word.hpp"

namespace monvar {

class BalancingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u ≈ v built from u1 ≈ v1 so that x and y each occur exactly n times on
/// both sides.
struct BalancedIdentity {
  Word u;
  Word v;
  std::size_t n = 0;

  Identity identity() const { return Identity(u, v); }
};

/// u = P·u1·x^{occ_x(v1)+1}·y^{occ_y(v1)+1} and
/// v = P·v1·x^{occ_x(u1)+1}·y^{occ_y(u1)+1}, where the left padding P is a
/// power of x followed by a power of y that evens out the two counts.
///
/// Throws BalancingError if either side is not over exactly {x, y}, if
/// u1 == v1, or if the construction collapses to a trivial identity (which
/// happens when one input is the other followed by a suitable power, e.g.
/// xyx and xy).
BalancedIdentity balance_identity(const Word& u1, const Word& v1);

/// {u1 ≈ v1, x^{occ_x(u1)+1} ≈ x^{occ_x(v1)+1}, x^{occ_y(u1)+1} ≈ x^{occ_y(v1)+1}}:
/// the axioms from which the balanced identity follows.
Presentation balancing_premises(const Word& u1, const Word& v1);

/// Checks the shape required of u ≈ v for parameter k: both sides over
/// exactly {x, y}, every occurrence count equal to k, neither x^k nor y^k a
/// factor of either side, and ini(u) != ini(v). Returns the first failed
/// condition, or nullopt.
std::optional<std::string> shape_violation(const Word& u, const Word& v, std::size_t k);

struct ShapedIdentity {
  Word u;
  Word v;
  DerivationCertificate certificate;  // u → v against the searched system

  Identity identity() const { return Identity(u, v); }
};

struct NoShapedIdentity {
  std::size_t states_explored = 0;
};

using ShapedSearchResult = std::variant<ShapedIdentity, NoShapedIdentity>;

/// Scans candidate words u of length 2k with the required occurrence
/// profile, in short-lex order, and explores each one's class within the
/// bounds looking for a partner v that completes the shape. Throws
/// ContentUnbalancedError; k must be at least 2.
ShapedSearchResult find_shaped_identity(const Presentation& sigma, std::size_t k,
                                        const std::optional<SearchBounds>& bounds =
                                            std::nullopt);

}  // namespace monvar
