#include "monvar/identity.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace monvar {

Identity::Identity(Word a, Word b) {
  if (b < a) std::swap(a, b);
  lhs_ = std::move(a);
  rhs_ = std::move(b);
}

std::string format_identity(const Identity& id) {
  return format_word(id.lhs()) + " = " + format_word(id.rhs());
}

Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("identity must have the form '<word> = <word>': '" +
                     std::string(text) + "'");
  }
  return Identity(parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1)));
}

ContentUnbalancedError::ContentUnbalancedError(Identity id)
    : std::domain_error("identity " + format_identity(id) +
                        " is not content-balanced; exact rewriting needs the same "
                        "variables on both sides"),
      identity_(std::move(id)) {}

Presentation::Presentation(std::initializer_list<Identity> ids) {
  for (const auto& id : ids) add(id);
}

Presentation::Presentation(std::span<const Identity> ids) {
  for (const auto& id : ids) add(id);
}

bool Presentation::add(const Identity& id) {
  if (std::find(ids_.begin(), ids_.end(), id) != ids_.end()) return false;
  ids_.push_back(id);
  return true;
}

std::size_t Presentation::longest_side() const {
  std::size_t n = 0;
  for (const auto& id : ids_) n = std::max(n, id.longest_side());
  return n;
}

std::optional<Identity> Presentation::first_unbalanced() const {
  for (const auto& id : ids_) {
    if (!id.content_balanced()) return id;
  }
  return std::nullopt;
}

void Presentation::require_content_balanced() const {
  if (auto bad = first_unbalanced()) throw ContentUnbalancedError(*bad);
}

Presentation Presentation::merged(const Presentation& a, const Presentation& b) {
  Presentation out = a;
  for (const auto& id : b.ids_) out.add(id);
  return out;
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      p.add(parse_identity(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open identity file '" + path + "'");
  try {
    return parse_presentation(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (const auto& id : p.identities()) out += format_identity(id) + "\n";
  return out;
}

}  // namespace monvar
