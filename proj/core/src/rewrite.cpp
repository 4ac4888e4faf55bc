#include "monvar/rewrite.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "prefix_matcher.hpp"

namespace monvar {

std::string_view to_string(Direction d) {
  return d == Direction::kForward ? "forward" : "backward";
}

namespace {

struct Oriented {
  const Word& from;
  const Word& to;
};

Oriented orient(const Identity& id, Direction d) {
  if (d == Direction::kForward) return {id.lhs(), id.rhs()};
  return {id.rhs(), id.lhs()};
}

const Identity& identity_at(const Presentation& sigma, std::size_t index) {
  if (index >= sigma.size()) {
    throw std::out_of_range("rewrite step references identity " + std::to_string(index) +
                            " but the system has " + std::to_string(sigma.size()));
  }
  return sigma[index];
}

}  // namespace

Word RewriteStep::source(const Presentation& sigma) const {
  auto [from, to] = orient(identity_at(sigma, identity), direction);
  return prefix * subst.apply(from) * suffix;
}

Word RewriteStep::target(const Presentation& sigma) const {
  auto [from, to] = orient(identity_at(sigma, identity), direction);
  return prefix * subst.apply(to) * suffix;
}

RewriteStep inverted(const RewriteStep& step) {
  RewriteStep out = step;
  out.direction =
      step.direction == Direction::kForward ? Direction::kBackward : Direction::kForward;
  return out;
}

std::vector<Successor> one_step_successors(const Word& p, const Presentation& sigma) {
  sigma.require_content_balanced();
  const auto text = p.letters();
  std::unordered_map<Word, RewriteStep> found;
  std::vector<Variable> buffer;

  for (std::size_t index = 0; index < sigma.size(); ++index) {
    const Identity& id = sigma[index];
    if (id.trivial()) continue;
    for (Direction dir : {Direction::kForward, Direction::kBackward}) {
      auto [from, to] = orient(id, dir);
      detail::PatternShape shape(from);
      std::vector<std::size_t> to_slots;
      to_slots.reserve(to.size());
      for (auto v : to) to_slots.push_back(shape.slot(v));

      for (std::size_t start = 0; start <= text.size(); ++start) {
        detail::match_prefixes_at(
            shape, text, start,
            [&](const std::vector<detail::Slice>& slices, std::size_t end) {
              buffer.assign(text.begin(), text.begin() + start);
              for (std::size_t s : to_slots) {
                const auto& sl = slices[s];
                buffer.insert(buffer.end(), text.begin() + sl.offset,
                              text.begin() + sl.offset + sl.length);
              }
              buffer.insert(buffer.end(), text.begin() + end, text.end());
              if (std::equal(buffer.begin(), buffer.end(), text.begin(), text.end())) {
                return;
              }
              Word q(buffer);
              if (found.contains(q)) return;
              RewriteStep step{Word(text.first(start)), Word(text.subspan(end)), index, dir,
                               detail::to_substitution(shape, text, slices)};
              found.emplace(std::move(q), std::move(step));
            });
      }
    }
  }

  std::vector<Successor> out;
  out.reserve(found.size());
  for (auto& [q, step] : found) out.push_back({q, std::move(step)});
  std::sort(out.begin(), out.end(),
            [](const Successor& a, const Successor& b) { return ShortLex{}(a.word, b.word); });
  return out;
}

SearchBounds SearchBounds::defaults_for(const Presentation& sigma, const Word& u,
                                        const Word& v) {
  SearchBounds b;
  b.max_word_length =
      std::max<std::size_t>(1, 2 * std::max({u.size(), v.size(), sigma.longest_side()}));
  return b;
}

void SearchBounds::validate() const {
  if (max_word_length == 0 || max_depth == 0 || max_states == 0) {
    throw std::invalid_argument("search bounds must all be positive");
  }
}

DerivationCertificate DerivationCertificate::reversed() const {
  DerivationCertificate out{end, start, {}};
  out.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.steps.push_back(inverted(*it));
  return out;
}

SearchTree::SearchTree(const Presentation& sigma, Word root, const SearchBounds& bounds,
                       const std::optional<Word>& stop_at) {
  bounds.validate();
  sigma.require_content_balanced();
  nodes_.push_back({std::move(root), 0, 0, std::nullopt});
  index_.emplace(nodes_.front().word, 0);
  if (stop_at && *stop_at == nodes_.front().word) return;

  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    if (depth == bounds.max_depth) {
      // Saturated only if the last level adds nothing new.
      for (std::size_t f : frontier) {
        Word w = nodes_[f].word;
        for (const auto& s : one_step_successors(w, sigma)) {
          if (s.word.size() > bounds.max_word_length) {
            length_pruned_ = true;
          } else if (!contains(s.word)) {
            depth_cut_ = true;
            return;
          }
        }
      }
      return;
    }
    std::vector<std::size_t> next;
    for (std::size_t f : frontier) {
      Word w = nodes_[f].word;
      for (auto& s : one_step_successors(w, sigma)) {
        if (s.word.size() > bounds.max_word_length) {
          length_pruned_ = true;
          continue;
        }
        if (contains(s.word)) continue;
        if (nodes_.size() >= bounds.max_states) {
          state_capped_ = true;
          return;
        }
        const bool hit = stop_at && *stop_at == s.word;
        index_.emplace(s.word, nodes_.size());
        next.push_back(nodes_.size());
        nodes_.push_back({std::move(s.word), f, depth + 1, std::move(s.step)});
        if (hit) return;
      }
    }
    std::sort(next.begin(), next.end(), [this](std::size_t a, std::size_t b) {
      return ShortLex{}(nodes_[a].word, nodes_[b].word);
    });
    frontier = std::move(next);
  }
}

std::optional<std::size_t> SearchTree::depth_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return nodes_[it->second].depth;
}

WordSet SearchTree::words() const {
  WordSet out;
  for (const auto& n : nodes_) out.insert(n.word);
  return out;
}

std::optional<DerivationCertificate> SearchTree::certificate_to(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  DerivationCertificate cert{root(), w, {}};
  for (std::size_t i = it->second; i != 0; i = nodes_[i].parent) {
    cert.steps.push_back(*nodes_[i].step);
  }
  std::reverse(cert.steps.begin(), cert.steps.end());
  return cert;
}

DeriveResult derive(const Presentation& sigma, const Word& u, const Word& v,
                    const SearchBounds& bounds) {
  SearchTree tree(sigma, u, bounds, v);
  if (auto cert = tree.certificate_to(v)) return Proved{std::move(*cert)};
  return NotFoundWithinBounds{tree.size()};
}

DeriveResult derive(const Presentation& sigma, const Word& u, const Word& v) {
  return derive(sigma, u, v, SearchBounds::defaults_for(sigma, u, v));
}

CertificateVerdict verify_certificate(const Presentation& sigma,
                                      const DerivationCertificate& cert) {
  Word current = cert.start;
  std::unordered_set<Word> seen{current};
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const RewriteStep& step = cert.steps[i];
    if (step.identity >= sigma.size()) {
      return Reject{i, "identity index " + std::to_string(step.identity) + " out of range"};
    }
    if (step.source(sigma) != current) {
      return Reject{i, "step does not rewrite " + format_word(current) + ": its source is " +
                           format_word(step.source(sigma))};
    }
    Word next = step.target(sigma);
    if (!seen.insert(next).second) {
      return Reject{i, "word " + format_word(next) + " repeats earlier in the chain"};
    }
    current = std::move(next);
  }
  if (current != cert.end) {
    return Reject{cert.steps.size(), "chain ends at " + format_word(current) +
                                         ", not at the claimed " + format_word(cert.end)};
  }
  return Accept{};
}

ClassVerdict class_closure_verify(const WordSet& candidate, const Word& w,
                                  const Presentation& sigma) {
  if (!candidate.contains(w)) {
    throw std::invalid_argument("class_closure_verify: " + format_word(w) +
                                " is not in the candidate set");
  }
  if (auto bad = sigma.first_unbalanced()) return ContentUnbalanced{*bad};

  std::unordered_map<Word, std::vector<Word>> edges;
  for (const Word& m : candidate) {
    auto& out = edges[m];
    for (auto& s : one_step_successors(m, sigma)) {
      if (!candidate.contains(s.word)) return NotClosed{m, s.word};
      out.push_back(std::move(s.word));
    }
  }

  std::unordered_set<Word> reached{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    for (const Word& q : edges[cur]) {
      if (reached.insert(q).second) stack.push_back(q);
    }
  }
  for (const Word& m : candidate) {
    if (!reached.contains(m)) return NotConnected{m};
  }
  return ExactClass{candidate};
}

bool isoterm_exact(const Word& w, const Presentation& sigma) {
  sigma.require_content_balanced();
  return is_exact_class(class_closure_verify(WordSet{w}, w, sigma));
}

ClassEnumeration enumerate_class(const Word& w, const Presentation& sigma,
                                 const SearchBounds& bounds) {
  SearchTree tree(sigma, w, bounds);
  if (tree.saturated()) return Complete{tree.words()};
  return CapExceeded{tree.words()};
}

}  // namespace monvar
