#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monvar/lattice.hpp"

namespace monvar {

FiniteLattice parse_lattice_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LatticeError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers")) {
    throw LatticeError("lattice file needs \"elements\" and \"covers\" fields");
  }
  try {
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    std::vector<FiniteLattice::Cover> covers;
    for (const auto& pair : doc.at("covers")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw LatticeError("each cover must be a [lower, upper] pair");
      }
      covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    std::string name = doc.value("name", std::string{});
    return FiniteLattice::build(std::move(elements), std::move(covers), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw LatticeError(std::string("malformed lattice file: ") + e.what());
  }
}

FiniteLattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError("cannot open lattice file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_json(buf.str());
}

std::string to_json(const FiniteLattice& lattice) {
  nlohmann::json doc;
  if (!lattice.name().empty()) doc["name"] = lattice.name();
  doc["elements"] = lattice.labels();
  doc["covers"] = nlohmann::json::array();
  for (auto [a, b] : lattice.covers()) {
    doc["covers"].push_back({lattice.label(a), lattice.label(b)});
  }
  return doc.dump(2);
}

}  // namespace monvar
