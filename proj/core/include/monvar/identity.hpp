#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monvar/word.hpp"

namespace monvar {

/// u ≈ v. Stored with the lexicographically smaller side on the left; as an
/// axiom it may be used in either direction.
class Identity {
 public:
  Identity() = default;
  Identity(Word a, Word b);

  const Word& lhs() const { return lhs_; }
  const Word& rhs() const { return rhs_; }
  bool trivial() const { return lhs_ == rhs_; }
  bool content_balanced() const { return content(lhs_) == content(rhs_); }
  std::size_t longest_side() const { return std::max(lhs_.size(), rhs_.size()); }

  friend bool operator==(const Identity&, const Identity&) = default;
  friend auto operator<=>(const Identity&, const Identity&) = default;

 private:
  Word lhs_;
  Word rhs_;
};

/// "<word> = <word>"
std::string format_identity(const Identity& id);
Identity parse_identity(std::string_view text);

/// Raised by the exact rewriting operations when an axiom has a variable on
/// one side only; its successor sets would be infinite.
class ContentUnbalancedError : public std::domain_error {
 public:
  explicit ContentUnbalancedError(Identity id);
  const Identity& identity() const { return identity_; }

 private:
  Identity identity_;
};

/// A finite identity system. Keeps insertion order (identities are referenced
/// by index from rewrite steps) and drops duplicates.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::initializer_list<Identity> ids);
  explicit Presentation(std::span<const Identity> ids);

  /// Returns false if an equal identity is already present.
  bool add(const Identity& id);

  std::span<const Identity> identities() const { return ids_; }
  const Identity& operator[](std::size_t i) const { return ids_.at(i); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t longest_side() const;

  std::optional<Identity> first_unbalanced() const;
  /// Throws ContentUnbalancedError naming the first offending identity.
  void require_content_balanced() const;

  /// Identities of `a` followed by those of `b` not already in `a`.
  static Presentation merged(const Presentation& a, const Presentation& b);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<Identity> ids_;
};

// Identity-system files: one "<word> = <word>" per line, '#' starts a comment,
// blank lines are skipped. Parse errors carry the line number.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

}  // namespace monvar
