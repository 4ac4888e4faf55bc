#include "monvar/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace monvar {

namespace {

using Element = FiniteLattice::Element;

constexpr std::array<std::string_view, 9> kPropertyNames = {
    "neutral",      "standard",      "costandard",    "distributive", "codistributive",
    "modular",      "lower_modular", "upper_modular", "cancellable",
};

// The defining formulas. Costandard, codistributive and upper-modular are not
// here: they are the primal formulas evaluated in the dual lattice.

bool is_neutral(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    for (Element z = 0; z < L.size(); ++z) {
      Element lhs = L.meet(L.meet(L.join(x, y), L.join(y, z)), L.join(z, x));
      Element rhs = L.join(L.join(L.meet(x, y), L.meet(y, z)), L.meet(z, x));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_standard(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    for (Element z = 0; z < L.size(); ++z) {
      if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), L.meet(y, z))) return false;
    }
  }
  return true;
}

bool is_distributive(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    for (Element z = 0; z < L.size(); ++z) {
      if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), L.join(x, z))) return false;
    }
  }
  return true;
}

bool is_modular(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    for (Element z = 0; z < L.size(); ++z) {
      if (!L.leq(y, z)) continue;
      if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), y)) return false;
    }
  }
  return true;
}

bool is_cancellable(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    for (Element z = 0; z < L.size(); ++z) {
      if (L.join(x, y) == L.join(x, z) && L.meet(x, y) == L.meet(x, z) && y != z) {
        return false;
      }
    }
  }
  return true;
}

bool is_lower_modular(const FiniteLattice& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    if (!L.leq(x, y)) continue;
    for (Element z = 0; z < L.size(); ++z) {
      if (L.join(x, L.meet(y, z)) != L.meet(y, L.join(x, z))) return false;
    }
  }
  return true;
}

bool primal(const FiniteLattice& L, Element x, ElementProperty p) {
  switch (p) {
    case ElementProperty::kNeutral: return is_neutral(L, x);
    case ElementProperty::kStandard: return is_standard(L, x);
    case ElementProperty::kDistributive: return is_distributive(L, x);
    case ElementProperty::kModular: return is_modular(L, x);
    case ElementProperty::kLowerModular: return is_lower_modular(L, x);
    case ElementProperty::kCancellable: return is_cancellable(L, x);
    default: break;
  }
  throw std::logic_error("not a primal property");
}

bool is_dual_kind(ElementProperty p) {
  return p == ElementProperty::kCostandard || p == ElementProperty::kCodistributive ||
         p == ElementProperty::kUpperModular;
}

constexpr std::array<std::pair<ElementProperty, ElementProperty>, 9> kImplications = {{
    {ElementProperty::kNeutral, ElementProperty::kStandard},
    {ElementProperty::kNeutral, ElementProperty::kCostandard},
    {ElementProperty::kStandard, ElementProperty::kCancellable},
    {ElementProperty::kCostandard, ElementProperty::kCancellable},
    {ElementProperty::kCancellable, ElementProperty::kModular},
    {ElementProperty::kDistributive, ElementProperty::kLowerModular},
    {ElementProperty::kCodistributive, ElementProperty::kUpperModular},
    {ElementProperty::kStandard, ElementProperty::kDistributive},
    {ElementProperty::kCostandard, ElementProperty::kCodistributive},
}};

}  // namespace

std::string_view to_string(ElementProperty p) {
  return kPropertyNames[static_cast<std::size_t>(p)];
}

std::optional<ElementProperty> property_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (kPropertyNames[i] == name) return static_cast<ElementProperty>(i);
  }
  return std::nullopt;
}

ElementProperty dual_of(ElementProperty p) {
  switch (p) {
    case ElementProperty::kStandard: return ElementProperty::kCostandard;
    case ElementProperty::kCostandard: return ElementProperty::kStandard;
    case ElementProperty::kDistributive: return ElementProperty::kCodistributive;
    case ElementProperty::kCodistributive: return ElementProperty::kDistributive;
    case ElementProperty::kLowerModular: return ElementProperty::kUpperModular;
    case ElementProperty::kUpperModular: return ElementProperty::kLowerModular;
    default: return p;
  }
}

FiniteLattice FiniteLattice::build(std::vector<std::string> elements,
                                   std::vector<Cover> covers, std::string name) {
  if (elements.empty()) throw LatticeError("a lattice needs at least one element");
  FiniteLattice L;
  L.name_ = std::move(name);
  L.labels_ = std::move(elements);
  const std::size_t n = L.labels_.size();

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) {
    if (!index.emplace(L.labels_[i], i).second) {
      throw LatticeError("duplicate element label '" + L.labels_[i] + "'");
    }
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw LatticeError("cover mentions unknown element '" + label + "'");
    return it->second;
  };

  L.leq_.assign(n * n, 0);
  for (Element i = 0; i < n; ++i) L.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    Element a = lookup(lo), b = lookup(hi);
    if (a == b) throw LatticeError("element '" + lo + "' cannot cover itself");
    L.leq_[a * n + b] = 1;
  }
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!L.leq_[i * n + k]) continue;
      for (Element j = 0; j < n; ++j) {
        if (L.leq_[k * n + j]) L.leq_[i * n + j] = 1;
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (L.leq_[i * n + j] && L.leq_[j * n + i]) {
        throw LatticeError("not a partial order: cycle through '" + L.labels_[i] + "' and '" +
                           L.labels_[j] + "'");
      }
    }
  }

  // The least element of a set of bounds, if any.
  auto least = [&](const std::vector<Element>& bounds, bool upper) -> std::optional<Element> {
    for (Element c : bounds) {
      bool best = std::all_of(bounds.begin(), bounds.end(), [&](Element d) {
        return upper ? L.leq(c, d) : L.leq(d, c);
      });
      if (best) return c;
    }
    return std::nullopt;
  };

  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  std::vector<Element> bounds;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      bounds.clear();
      for (Element c = 0; c < n; ++c) {
        if (L.leq(a, c) && L.leq(b, c)) bounds.push_back(c);
      }
      auto j = least(bounds, true);
      if (!j) {
        throw LatticeError("not a lattice: no least upper bound of {" + L.labels_[a] + ", " +
                           L.labels_[b] + "}");
      }
      bounds.clear();
      for (Element c = 0; c < n; ++c) {
        if (L.leq(c, a) && L.leq(c, b)) bounds.push_back(c);
      }
      auto m = least(bounds, false);
      if (!m) {
        throw LatticeError("not a lattice: no greatest lower bound of {" + L.labels_[a] +
                           ", " + L.labels_[b] + "}");
      }
      L.join_[a * n + b] = L.join_[b * n + a] = *j;
      L.meet_[a * n + b] = L.meet_[b * n + a] = *m;
    }
  }

  L.bottom_ = L.top_ = 0;
  for (Element i = 0; i < n; ++i) {
    L.bottom_ = L.meet(L.bottom_, i);
    L.top_ = L.join(L.top_, i);
  }
  return L;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element FiniteLattice::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw LatticeError("unknown element '" + std::string(label) + "'");
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (Element c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice D;
  D.name_ = name_ + "^d";
  D.labels_ = labels_;
  const std::size_t n = size();
  D.leq_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) D.leq_[a * n + b] = leq_[b * n + a];
  }
  D.meet_ = join_;
  D.join_ = meet_;
  D.bottom_ = top_;
  D.top_ = bottom_;
  return D;
}

bool has_property(const FiniteLattice& lattice, Element x, ElementProperty p) {
  if (x >= lattice.size()) throw LatticeError("element index out of range");
  if (is_dual_kind(p)) return primal(lattice.dual(), x, dual_of(p));
  return primal(lattice, x, p);
}

bool has_property(const FiniteLattice& lattice, std::string_view x, ElementProperty p) {
  return has_property(lattice, lattice.at(x), p);
}

std::vector<Element> elements_with(const FiniteLattice& lattice, ElementProperty p) {
  const FiniteLattice* L = &lattice;
  std::optional<FiniteLattice> dual;
  ElementProperty q = p;
  if (is_dual_kind(p)) {
    dual = lattice.dual();
    L = &*dual;
    q = dual_of(p);
  }
  std::vector<Element> out;
  for (Element x = 0; x < L->size(); ++x) {
    if (primal(*L, x, q)) out.push_back(x);
  }
  return out;
}

std::vector<std::string> labels_with(const FiniteLattice& lattice, ElementProperty p) {
  std::vector<std::string> out;
  for (Element e : elements_with(lattice, p)) out.push_back(lattice.label(e));
  return out;
}

bool is_sublattice(const FiniteLattice& lattice, std::span<const Element> subset) {
  auto member = [&](Element e) {
    return std::find(subset.begin(), subset.end(), e) != subset.end();
  };
  for (Element a : subset) {
    if (a >= lattice.size()) throw LatticeError("element index out of range");
    for (Element b : subset) {
      if (!member(lattice.meet(a, b)) || !member(lattice.join(a, b))) return false;
    }
  }
  return true;
}

bool is_distributive_lattice(const FiniteLattice& lattice) {
  for (Element x = 0; x < lattice.size(); ++x) {
    if (!is_distributive(lattice, x)) return false;
  }
  return true;
}

std::span<const std::pair<ElementProperty, ElementProperty>> element_implications() {
  return kImplications;
}

ImplicationReport check_implications(const FiniteLattice& lattice) {
  std::array<std::vector<char>, kAllProperties.size()> table;
  for (ElementProperty p : kAllProperties) {
    auto& row = table[static_cast<std::size_t>(p)];
    row.assign(lattice.size(), 0);
    for (Element e : elements_with(lattice, p)) row[e] = 1;
  }
  ImplicationReport report;
  for (Element x = 0; x < lattice.size(); ++x) {
    for (const auto& [premise, conclusion] : kImplications) {
      ++report.checks;
      if (table[static_cast<std::size_t>(premise)][x] &&
          !table[static_cast<std::size_t>(conclusion)][x]) {
        report.violations.push_back({lattice.name(), lattice.label(x), premise, conclusion});
      }
    }
  }
  return report;
}

std::optional<ElementWitness> search_element_counterexample(
    std::span<const FiniteLattice> catalog, ElementProperty has, ElementProperty lacks) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const FiniteLattice& L = catalog[i];
    auto with = elements_with(L, has);
    auto without = elements_with(L, lacks);
    for (Element x : with) {
      if (!std::binary_search(without.begin(), without.end(), x)) {
        return ElementWitness{i, L.name(), x, L.label(x)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace monvar
