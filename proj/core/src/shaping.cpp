#include "monvar/shaping.hpp"

#include <algorithm>

namespace monvar {

namespace {

const Variable kX('x');
const Variable kY('y');

bool over_xy(const Word& w) { return content(w) == VariableSet{kX, kY}; }

Word x_pow(std::size_t n) { return Word(std::vector<Variable>(n, kX)); }
Word y_pow(std::size_t n) { return Word(std::vector<Variable>(n, kY)); }

}  // namespace

BalancedIdentity balance_identity(const Word& u1, const Word& v1) {
  if (!over_xy(u1) || !over_xy(v1)) {
    throw BalancingError("balance_identity: both sides must contain exactly x and y");
  }
  if (u1 == v1) throw BalancingError("balance_identity: the identity is trivial");

  Word u = u1 * x_pow(occ(v1, kX) + 1) * y_pow(occ(v1, kY) + 1);
  Word v = v1 * x_pow(occ(u1, kX) + 1) * y_pow(occ(u1, kY) + 1);
  const std::size_t nx = occ(u, kX);
  const std::size_t ny = occ(u, kY);
  const std::size_t n = std::max(nx, ny);
  Word pad = x_pow(n - nx) * y_pow(n - ny);
  u = pad * u;
  v = pad * v;
  if (u == v) {
    throw BalancingError("balance_identity: " + format_word(u1) + " = " + format_word(v1) +
                         " balances to the trivial identity " + format_word(u) + " = " +
                         format_word(v));
  }
  return {std::move(u), std::move(v), n};
}

Presentation balancing_premises(const Word& u1, const Word& v1) {
  return Presentation{
      Identity(u1, v1),
      Identity(x_pow(occ(u1, kX) + 1), x_pow(occ(v1, kX) + 1)),
      Identity(x_pow(occ(u1, kY) + 1), x_pow(occ(v1, kY) + 1)),
  };
}

std::optional<std::string> shape_violation(const Word& u, const Word& v, std::size_t k) {
  for (const Word* w : {&u, &v}) {
    const std::string name = format_word(*w);
    if (!over_xy(*w)) return name + " is not over exactly {x, y}";
    if (occ(*w, kX) != k || occ(*w, kY) != k) {
      return name + " does not have " + std::to_string(k) + " occurrences of each of x, y";
    }
    if (has_factor(*w, x_pow(k)) || has_factor(*w, y_pow(k))) {
      return name + " contains x^" + std::to_string(k) + " or y^" + std::to_string(k);
    }
  }
  if (ini(u) == ini(v)) return "ini(u) = ini(v) = " + format_word(ini(u));
  return std::nullopt;
}

ShapedSearchResult find_shaped_identity(const Presentation& sigma, std::size_t k,
                                        const std::optional<SearchBounds>& bounds) {
  if (k < 2) throw std::invalid_argument("find_shaped_identity: k must be at least 2");
  sigma.require_content_balanced();

  // Arrangements of k x's and k y's, in lexicographic (= short-lex) order.
  std::vector<Variable> letters(k, kX);
  letters.insert(letters.end(), k, kY);
  std::size_t explored = 0;
  do {
    Word u(letters);
    if (has_factor(u, x_pow(k)) || has_factor(u, y_pow(k))) continue;
    SearchBounds b = bounds ? *bounds : SearchBounds::defaults_for(sigma, u, u);
    SearchTree tree(sigma, u, b);
    explored += tree.size();
    for (const Word& v : tree.words()) {
      if (!shape_violation(u, v, k)) {
        return ShapedIdentity{u, v, *tree.certificate_to(v)};
      }
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return NoShapedIdentity{explored};
}

}  // namespace monvar
