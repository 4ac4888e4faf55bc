#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "monvar/certificate.hpp"
#include "monvar/lattice.hpp"
#include "monvar/verifier.hpp"

using namespace monvar;

namespace {

struct BoundOptions {
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> max_states;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-len", max_len, "longest word the search may visit");
    cmd->add_option("--max-depth", max_depth, "rewrite steps from the start word");
    cmd->add_option("--max-states", max_states, "words visited before giving up");
  }
  bool any() const { return max_len || max_depth || max_states; }
  SearchBounds resolve(SearchBounds b) const {
    if (max_len) b.max_word_length = *max_len;
    if (max_depth) b.max_depth = *max_depth;
    if (max_states) b.max_states = *max_states;
    b.validate();
    return b;
  }
  std::optional<SearchBounds> optional_for(const Word& u, const Word& v) const {
    if (!any()) return std::nullopt;
    return resolve(SearchBounds::defaults_for(Presentation{}, u, v));
  }
};

void print_verdict(const Verdict& v) { std::cout << to_string(v) << "\n"; }

int run_derive(const std::string& file, const std::string& lhs, const std::string& rhs,
               const BoundOptions& opts) {
  Presentation sigma = load_presentation(file);
  Word u = parse_word(lhs), v = parse_word(rhs);
  DeriveResult r = derive(sigma, u, v, opts.resolve(SearchBounds::defaults_for(sigma, u, v)));
  if (auto* p = std::get_if<Proved>(&r)) {
    std::cout << "Proved (" << p->certificate.length() << " step(s))\n"
              << describe_certificate(p->certificate, sigma) << "\n"
              << serialize_certificate(p->certificate);
    return 0;
  }
  std::cout << "NotFoundWithinBounds (" << std::get<NotFoundWithinBounds>(r).states_explored
            << " states explored)\n";
  return 1;
}

int run_class(const std::string& file, const std::string& word, const BoundOptions& opts) {
  Presentation sigma = load_presentation(file);
  Word w = parse_word(word);
  ClassEnumeration r =
      enumerate_class(w, sigma, opts.resolve(SearchBounds::defaults_for(sigma, w, w)));
  const WordSet* members;
  if (auto* c = std::get_if<Complete>(&r)) {
    std::cout << "Complete (" << c->members.size() << " word(s))\n";
    members = &c->members;
  } else {
    members = &std::get<CapExceeded>(r).partial;
    std::cout << "CapExceeded (" << members->size() << " word(s) reached)\n";
  }
  for (const auto& m : *members) std::cout << "  " << format_word(m) << "\n";
  return 0;
}

void print_table(const FiniteLattice& L, bool csv) {
  if (csv) {
    std::cout << "element,property,boolean\n";
    for (std::size_t e = 0; e < L.size(); ++e) {
      for (auto p : kAllProperties) {
        std::cout << L.label(e) << "," << to_string(p) << ","
                  << (has_property(L, e, p) ? "true" : "false") << "\n";
      }
    }
    return;
  }
  std::size_t width = 7;
  for (const auto& l : L.labels()) width = std::max(width, l.size());
  std::cout << std::left << std::setw(static_cast<int>(width)) << "element";
  for (auto p : kAllProperties) std::cout << "  " << to_string(p);
  std::cout << "\n";
  for (std::size_t e = 0; e < L.size(); ++e) {
    std::cout << std::left << std::setw(static_cast<int>(width)) << L.label(e);
    for (auto p : kAllProperties) {
      std::cout << "  " << std::setw(static_cast<int>(to_string(p).size()))
                << (has_property(L, e, p) ? "yes" : "no");
    }
    std::cout << "\n";
  }
}

int run_lattice(const std::string& file, const std::string& element, const std::string& property,
                bool implications, bool csv) {
  FiniteLattice L = load_lattice(file);
  if (!element.empty() || !property.empty()) {
    if (element.empty() || property.empty()) {
      throw CLI::ValidationError("--element and --property go together");
    }
    auto p = property_from_string(property);
    if (!p) throw CLI::ValidationError("unknown property '" + property + "'");
    std::cout << (has_property(L, element, *p) ? "yes" : "no") << "\n";
    return 0;
  }
  if (implications) {
    ImplicationReport rep = check_implications(L);
    std::cout << rep.checks << " implication checks, " << rep.violations.size()
              << " violation(s)\n";
    for (const auto& v : rep.violations) {
      std::cout << "  " << v.element << " is " << to_string(v.has) << " but not "
                << to_string(v.lacks) << "\n";
    }
    return rep.ok() ? 0 : 1;
  }
  print_table(L, csv);
  return 0;
}

int run_verify(const std::string& scenario, const std::string& report_path) {
  std::vector<std::string> names =
      scenario.empty() ? scenario_names() : std::vector<std::string>{scenario};
  std::string text;
  bool ok = true;
  for (const auto& name : names) {
    Report r = run_scenario(name);
    text += format_report(r) + "\n";
    ok = ok && r.status() != ReportStatus::kFail;
  }
  std::cout << text;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << text;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equational reasoning over monoid varieties"};
  app.require_subcommand(1);

  std::string system, lhs, rhs, word, variety, file, element, property, scenario, report;
  bool table = false, implications = false, csv = false;
  BoundOptions bounds;

  auto* derive_cmd = app.add_subcommand("derive", "search for a derivation of lhs = rhs");
  derive_cmd->add_option("--system", system, "identity file")->required();
  derive_cmd->add_option("--lhs", lhs)->required();
  derive_cmd->add_option("--rhs", rhs)->required();
  bounds.attach(derive_cmd);

  auto* class_cmd = app.add_subcommand("class", "enumerate the class of a word");
  class_cmd->add_option("--system", system, "identity file")->required();
  class_cmd->add_option("--word", word)->required();
  bounds.attach(class_cmd);

  auto* iso_cmd = app.add_subcommand("isoterm", "is the word an isoterm for the variety");
  iso_cmd->add_option("--variety", variety, "T, SL, C, LRB, RRB, MON, @file, meet(..), join(..)")
      ->required();
  iso_cmd->add_option("--word", word)->required();
  bounds.attach(iso_cmd);

  auto* sat_cmd = app.add_subcommand("satisfies", "does the variety satisfy lhs = rhs");
  sat_cmd->add_option("--variety", variety)->required();
  sat_cmd->add_option("--lhs", lhs)->required();
  sat_cmd->add_option("--rhs", rhs)->required();
  bounds.attach(sat_cmd);

  auto* lat_cmd = app.add_subcommand("lattice", "special elements of a finite lattice");
  lat_cmd->add_option("--file", file, "lattice JSON")->required();
  auto* el = lat_cmd->add_option("--element", element);
  auto* pr = lat_cmd->add_option("--property", property);
  auto* tb = lat_cmd->add_flag("--table", table, "property table (default)");
  auto* im = lat_cmd->add_flag("--implications", implications);
  lat_cmd->add_flag("--csv", csv, "table as element,property,boolean rows");
  el->excludes(tb)->excludes(im);
  pr->excludes(tb)->excludes(im);
  tb->excludes(im);

  auto* verify_cmd = app.add_subcommand("verify", "run verification scenarios");
  verify_cmd->add_option("scenario", scenario, "S1, S2, S3 or S4 (default: all)");
  verify_cmd->add_option("--report", report, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*derive_cmd) return run_derive(system, lhs, rhs, bounds);
    if (*class_cmd) return run_class(system, word, bounds);
    if (*iso_cmd) {
      Word w = parse_word(word);
      print_verdict(isoterm_for(parse_variety(variety), w, bounds.optional_for(w, w)));
      return 0;
    }
    if (*sat_cmd) {
      Word u = parse_word(lhs), v = parse_word(rhs);
      print_verdict(satisfies(parse_variety(variety), Identity(u, v), bounds.optional_for(u, v)));
      return 0;
    }
    if (*lat_cmd) return run_lattice(file, element, property, implications, csv);
    if (*verify_cmd) return run_verify(scenario, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
