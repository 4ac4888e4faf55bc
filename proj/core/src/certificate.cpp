#include "monvar/certificate.hpp"

#include <sstream>
#include <vector>

namespace monvar {

namespace {

std::string format_bindings(const Substitution& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const auto& [v, image] : s.bindings()) {
    if (!out.empty()) out += ",";
    out += v.token() + "->" + format_word(image);
  }
  return out;
}

Substitution parse_bindings(std::string_view text) {
  Substitution s;
  if (text == "-") return s;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    auto arrow = item.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("malformed binding '" + std::string(item) + "'");
    }
    Variable v = parse_variable(item.substr(0, arrow));
    if (s.find(v)) throw ParseError("variable " + v.token() + " bound twice");
    s.bind(v, parse_word(item.substr(arrow + 2)));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

RewriteStep parse_step(const std::vector<std::string>& fields, std::size_t expected) {
  if (fields.size() != 7) throw ParseError("step line needs 7 fields");
  if (fields[1] != std::to_string(expected)) {
    throw ParseError("expected step " + std::to_string(expected) + ", got " + fields[1]);
  }
  RewriteStep step;
  bool seen[5] = {};
  static constexpr std::string_view keys[5] = {"identity", "direction", "prefix", "subst",
                                               "suffix"};
  for (std::size_t i = 2; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    auto eq = f.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + f + "'");
    std::string_view key(f.data(), eq);
    std::string_view value(f.data() + eq + 1, f.size() - eq - 1);
    std::size_t k = 0;
    while (k < 5 && keys[k] != key) ++k;
    if (k == 5) throw ParseError("unknown step field '" + std::string(key) + "'");
    if (seen[k]) throw ParseError("duplicate step field '" + std::string(key) + "'");
    seen[k] = true;
    switch (k) {
      case 0:
        try {
          std::size_t pos = 0;
          step.identity = std::stoul(std::string(value), &pos);
          if (pos != value.size()) throw ParseError("");
        } catch (const std::exception&) {
          throw ParseError("bad identity index '" + std::string(value) + "'");
        }
        break;
      case 1:
        if (value == "forward") {
          step.direction = Direction::kForward;
        } else if (value == "backward") {
          step.direction = Direction::kBackward;
        } else {
          throw ParseError("bad direction '" + std::string(value) + "'");
        }
        break;
      case 2: step.prefix = parse_word(value); break;
      case 3: step.subst = parse_bindings(value); break;
      case 4: step.suffix = parse_word(value); break;
    }
  }
  return step;
}

}  // namespace

std::string serialize_certificate(const DerivationCertificate& cert) {
  std::ostringstream out;
  out << "certificate\n";
  out << "start " << format_word(cert.start) << "\n";
  out << "end " << format_word(cert.end) << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    out << "step " << (i + 1) << " identity=" << s.identity
        << " direction=" << to_string(s.direction) << " prefix=" << format_word(s.prefix)
        << " subst=" << format_bindings(s.subst) << " suffix=" << format_word(s.suffix)
        << "\n";
  }
  return out.str();
}

DerivationCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  DerivationCertificate cert;
  bool header = false, have_start = false, have_end = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty() || fields[0].starts_with('#')) continue;
    try {
      if (!header) {
        if (fields.size() != 1 || fields[0] != "certificate") {
          throw ParseError("expected 'certificate' header");
        }
        header = true;
      } else if (fields[0] == "start" && fields.size() == 2 && !have_start) {
        cert.start = parse_word(fields[1]);
        have_start = true;
      } else if (fields[0] == "end" && fields.size() == 2 && !have_end) {
        cert.end = parse_word(fields[1]);
        have_end = true;
      } else if (fields[0] == "step" && have_start && have_end) {
        cert.steps.push_back(parse_step(fields, cert.steps.size() + 1));
      } else {
        throw ParseError("unexpected line");
      }
    } catch (const ParseError& e) {
      throw ParseError("certificate line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header || !have_start || !have_end) {
    throw ParseError("certificate is missing its header, start or end line");
  }
  return cert;
}

std::string describe_certificate(const DerivationCertificate& cert,
                                 const Presentation& sigma) {
  std::ostringstream out;
  out << "  " << format_word(cert.start) << "\n";
  for (const auto& s : cert.steps) {
    const Identity& id = sigma[s.identity];
    const Word& from = s.direction == Direction::kForward ? id.lhs() : id.rhs();
    const Word& to = s.direction == Direction::kForward ? id.rhs() : id.lhs();
    out << "  -> " << format_word(s.target(sigma)) << "    [" << format_word(from)
        << " -> " << format_word(to) << " under " << format_substitution(s.subst)
        << ", prefix " << format_word(s.prefix) << ", suffix " << format_word(s.suffix)
        << "]\n";
  }
  return out.str();
}

}  // namespace monvar
