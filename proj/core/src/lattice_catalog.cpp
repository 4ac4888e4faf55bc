#include <string>

#include "monvar/lattice.hpp"

namespace monvar {

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw LatticeError("a chain needs at least one element");
  std::vector<std::string> elements;
  std::vector<FiniteLattice::Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FiniteLattice::build(std::move(elements), std::move(covers),
                              "C" + std::to_string(n));
}

FiniteLattice m3() {
  return FiniteLattice::build({"0", "p", "q", "r", "1"},
                              {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}},
                              "M3");
}

FiniteLattice n5() {
  return FiniteLattice::build({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}, "N5");
}

FiniteLattice boolean_lattice(std::size_t k) {
  if (k > 10) throw LatticeError("boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  auto label = [k](std::size_t mask) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) s += static_cast<char>('a' + i);
    }
    return s.empty() ? std::string("0") : s;
  };
  std::vector<std::string> elements;
  std::vector<FiniteLattice::Cover> covers;
  for (std::size_t mask = 0; mask < n; ++mask) {
    elements.push_back(label(mask));
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) {
        covers.emplace_back(label(mask), label(mask | (std::size_t{1} << i)));
      }
    }
  }
  return FiniteLattice::build(std::move(elements), std::move(covers),
                              "B" + std::to_string(k));
}

FiniteLattice with_new_bounds(const FiniteLattice& lattice) {
  std::vector<std::string> elements = lattice.labels();
  elements.push_back("_0");
  elements.push_back("_1");
  std::vector<FiniteLattice::Cover> covers;
  for (auto [a, b] : lattice.covers()) covers.emplace_back(lattice.label(a), lattice.label(b));
  covers.emplace_back("_0", lattice.label(lattice.bottom()));
  covers.emplace_back(lattice.label(lattice.top()), "_1");
  return FiniteLattice::build(std::move(elements), std::move(covers), lattice.name() + "+");
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  auto label = [&](std::size_t i, std::size_t j) {
    return "(" + a.label(i) + "," + b.label(j) + ")";
  };
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) elements.push_back(label(i, j));
  }
  std::vector<FiniteLattice::Cover> covers;
  for (auto [lo, hi] : a.covers()) {
    for (std::size_t j = 0; j < b.size(); ++j) covers.emplace_back(label(lo, j), label(hi, j));
  }
  for (auto [lo, hi] : b.covers()) {
    for (std::size_t i = 0; i < a.size(); ++i) covers.emplace_back(label(i, lo), label(i, hi));
  }
  return FiniteLattice::build(std::move(elements), std::move(covers),
                              a.name() + "x" + b.name());
}

std::vector<FiniteLattice> builtin_catalog() {
  std::vector<FiniteLattice> base;
  for (std::size_t n = 2; n <= 7; ++n) base.push_back(chain(n));
  base.push_back(m3());
  base.push_back(n5());
  base.push_back(boolean_lattice(2));
  base.push_back(boolean_lattice(3));
  base.push_back(with_new_bounds(m3()));
  base.push_back(with_new_bounds(n5()));

  std::vector<FiniteLattice> catalog{chain(1)};
  catalog.insert(catalog.end(), base.begin(), base.end());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].size() * base[j].size() <= 36) catalog.push_back(product(base[i], base[j]));
    }
  }
  return catalog;
}

}  // namespace monvar
