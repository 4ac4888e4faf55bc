#pragma once

// One-step rewriting modulo a presentation, bounded derivation search with
// replayable certificates, and exact class computations.
//
// An identity u ≈ v follows from Σ iff u and v are joined by a chain of
// distinct words, each adjacent pair of the form a·ξ(s)·b, a·ξ(t)·b for an
// axiom s ≈ t of Σ and an endomorphism ξ. Everything here is built on that
// characterisation.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "monvar/identity.hpp"
#include "monvar/word.hpp"

namespace monvar {

enum class Direction { kForward, kBackward };

std::string_view to_string(Direction d);

/// Rewrites source = prefix·ξ(s)·suffix into target = prefix·ξ(t)·suffix,
/// where (s, t) is the referenced identity oriented by `direction`
/// (forward: lhs → rhs).
struct RewriteStep {
  Word prefix;
  Word suffix;
  std::size_t identity = 0;
  Direction direction = Direction::kForward;
  Substitution subst;

  Word source(const Presentation& sigma) const;
  Word target(const Presentation& sigma) const;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// The step read backwards: same factorisation, opposite direction.
RewriteStep inverted(const RewriteStep& step);

struct Successor {
  Word word;
  RewriteStep step;
};

/// Every q ≠ p reachable from p in one step, in short-lex order of q. Each q
/// carries the first step (in identity, direction, position order) that
/// produces it. Throws ContentUnbalancedError.
std::vector<Successor> one_step_successors(const Word& p, const Presentation& sigma);

struct SearchBounds {
  std::size_t max_word_length = 0;
  std::size_t max_depth = 10;
  std::size_t max_states = 1'000'000;

  /// max_word_length = 2 · max(|u|, |v|, longest side of Σ).
  static SearchBounds defaults_for(const Presentation& sigma, const Word& u,
                                   const Word& v);
  /// Throws std::invalid_argument unless every bound is positive.
  void validate() const;
};

/// start = w0 → w1 → … → wn = end, one RewriteStep per arrow.
struct DerivationCertificate {
  Word start;
  Word end;
  std::vector<RewriteStep> steps;

  std::size_t length() const { return steps.size(); }
  /// The certificate for end ≈ start.
  DerivationCertificate reversed() const;
};

struct Proved {
  DerivationCertificate certificate;
};
struct NotFoundWithinBounds {
  std::size_t states_explored = 0;
};
using DeriveResult = std::variant<Proved, NotFoundWithinBounds>;

/// Breadth-first derivation search from u towards v. A NotFoundWithinBounds
/// answer is not a refutation. Throws ContentUnbalancedError.
DeriveResult derive(const Presentation& sigma, const Word& u, const Word& v,
                    const SearchBounds& bounds);
/// Same, with SearchBounds::defaults_for(sigma, u, v).
DeriveResult derive(const Presentation& sigma, const Word& u, const Word& v);

inline bool is_proved(const DeriveResult& r) { return std::holds_alternative<Proved>(r); }

/// Breadth-first exploration of the class of a root word under the bounds.
/// Words are expanded level by level in short-lex order, so the tree and the
/// certificates it yields are deterministic.
class SearchTree {
 public:
  /// Explores until the bounds are exhausted or `stop_at` is reached.
  SearchTree(const Presentation& sigma, Word root, const SearchBounds& bounds,
             const std::optional<Word>& stop_at = std::nullopt);

  const Word& root() const { return nodes_.front().word; }
  bool contains(const Word& w) const { return index_.contains(w); }
  std::size_t size() const { return nodes_.size(); }
  std::optional<std::size_t> depth_of(const Word& w) const;
  /// Reached words in short-lex order.
  WordSet words() const;

  /// Certificate root → w, or nullopt if w was not reached.
  std::optional<DerivationCertificate> certificate_to(const Word& w) const;

  /// True iff exploration saturated: no word was pruned by length, no level
  /// was cut off by depth, and the state cap was not hit. A saturated tree
  /// holds the full class of the root.
  bool saturated() const { return !length_pruned_ && !depth_cut_ && !state_capped_; }
  bool length_pruned() const { return length_pruned_; }
  bool depth_cut() const { return depth_cut_; }
  bool state_capped() const { return state_capped_; }

 private:
  struct Node {
    Word word;
    std::size_t parent;  // index into nodes_; root points at itself
    std::size_t depth;
    std::optional<RewriteStep> step;  // parent → this
  };

  std::vector<Node> nodes_;
  std::unordered_map<Word, std::size_t> index_;
  bool length_pruned_ = false;
  bool depth_cut_ = false;
  bool state_capped_ = false;
};

struct Accept {};
struct Reject {
  std::size_t step_index;  // steps.size() when the end word is wrong
  std::string reason;
};
using CertificateVerdict = std::variant<Accept, Reject>;

/// Replays every step against sigma; accepts iff all replay, the last word
/// equals cert.end, and all words along the chain are pairwise distinct.
CertificateVerdict verify_certificate(const Presentation& sigma,
                                      const DerivationCertificate& cert);

inline bool accepted(const CertificateVerdict& v) { return std::holds_alternative<Accept>(v); }

// Class verification.

struct ExactClass {
  WordSet members;
};
struct NotClosed {
  Word member;
  Word escaping_successor;
};
struct NotConnected {
  Word unreached_member;
};
struct ContentUnbalanced {
  Identity identity;
};
using ClassVerdict = std::variant<ExactClass, NotClosed, NotConnected, ContentUnbalanced>;

/// ExactClass iff every one-step successor of every member is a member and
/// every member is reachable from w inside the candidate set; the candidate
/// is then precisely the class of w modulo the congruence generated by sigma.
/// Throws std::invalid_argument if w is not a member.
ClassVerdict class_closure_verify(const WordSet& candidate, const Word& w,
                                  const Presentation& sigma);

inline bool is_exact_class(const ClassVerdict& v) {
  return std::holds_alternative<ExactClass>(v);
}

/// True iff w is alone in its class. Throws ContentUnbalancedError.
bool isoterm_exact(const Word& w, const Presentation& sigma);

struct Complete {
  WordSet members;
};
struct CapExceeded {
  WordSet partial;
};
using ClassEnumeration = std::variant<Complete, CapExceeded>;

/// Closure of {w} under one-step successors. Complete only if no bound was
/// hit, in which case the set is exactly the class of w.
ClassEnumeration enumerate_class(const Word& w, const Presentation& sigma,
                                 const SearchBounds& bounds);

}  // namespace monvar
