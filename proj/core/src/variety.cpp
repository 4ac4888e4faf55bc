#include "monvar/variety.hpp"

#include <algorithm>
#include <stdexcept>

namespace monvar {

namespace {

const Variable kX('x');
const Variable kY('y');

SearchBounds bounds_or_default(const std::optional<SearchBounds>& bounds,
                               const Presentation& sigma, const Word& u, const Word& v) {
  return bounds ? *bounds : SearchBounds::defaults_for(sigma, u, v);
}

// The FIC-class of w when it is known to be finite and has been computed
// exactly; nullopt otherwise.
std::optional<WordSet> finite_class(const VarietyHandle& h, const Word& w,
                                    const std::optional<SearchBounds>& bounds) {
  switch (h.kind()) {
    case VarietyHandle::Kind::kPresented: {
      const auto& sigma = h.presentation();
      auto result = enumerate_class(w, sigma, bounds_or_default(bounds, sigma, w, w));
      if (auto* c = std::get_if<Complete>(&result)) return std::move(c->members);
      return std::nullopt;
    }
    case VarietyHandle::Kind::kBuiltin:
      // Under C a word with no repeated variable is equivalent exactly to its
      // rearrangements.
      if (h.builtin_kind() == BuiltinVariety::kCommutativeC &&
          content(w).size() == w.size()) {
        std::vector<Variable> letters(w.begin(), w.end());
        std::sort(letters.begin(), letters.end());
        WordSet out;
        do {
          out.insert(Word(letters));
        } while (std::next_permutation(letters.begin(), letters.end()));
        return out;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// satisfies(), upgraded with an exact class computation where the component
// is presented and the derivation search was inconclusive.
Verdict equivalent(const VarietyHandle& h, const Word& u, const Word& v,
                   const std::optional<SearchBounds>& bounds) {
  Verdict direct = satisfies(h, Identity(u, v), bounds);
  if (!direct.is_unknown() || h.kind() != VarietyHandle::Kind::kPresented) return direct;
  if (auto cls = finite_class(h, u, bounds)) return Verdict::from_bool(cls->contains(v));
  return direct;
}

std::optional<Presentation> presentation_of(const VarietyHandle& h) {
  switch (h.kind()) {
    case VarietyHandle::Kind::kPresented: return h.presentation();
    case VarietyHandle::Kind::kBuiltin: return reference_presentation(h.builtin_kind());
    default: return std::nullopt;
  }
}

}  // namespace

std::string_view name_of(BuiltinVariety b) {
  switch (b) {
    case BuiltinVariety::kTrivial: return "T";
    case BuiltinVariety::kSemilattice: return "SL";
    case BuiltinVariety::kCommutativeC: return "C";
    case BuiltinVariety::kLeftRegularBand: return "LRB";
    case BuiltinVariety::kRightRegularBand: return "RRB";
  }
  return "?";
}

std::optional<Presentation> reference_presentation(BuiltinVariety b) {
  const Word x{kX}, y{kY};
  switch (b) {
    case BuiltinVariety::kTrivial: return std::nullopt;
    case BuiltinVariety::kSemilattice:
      return Presentation{Identity(x * x, x), Identity(x * y, y * x)};
    case BuiltinVariety::kCommutativeC:
      return Presentation{Identity(x * x, x * x * x), Identity(x * y, y * x)};
    case BuiltinVariety::kLeftRegularBand: return Presentation{Identity(x * y, x * y * x)};
    case BuiltinVariety::kRightRegularBand: return Presentation{Identity(x * y, y * x * y)};
  }
  return std::nullopt;
}

std::string to_string(const Verdict& v) {
  switch (v.kind()) {
    case Verdict::Kind::kYes: return "Yes";
    case Verdict::Kind::kNo: return "No";
    case Verdict::Kind::kUnknown:
      return v.reason() == UnknownReason::kBounds ? "Unknown(bounds)"
                                                  : "Unknown(composition)";
  }
  return "?";
}

VarietyHandle VarietyHandle::builtin(BuiltinVariety b) {
  VarietyHandle h;
  h.kind_ = Kind::kBuiltin;
  h.builtin_ = b;
  return h;
}

VarietyHandle VarietyHandle::presented(Presentation sigma, std::string label) {
  VarietyHandle h;
  h.kind_ = Kind::kPresented;
  h.sigma_ = std::make_shared<const Presentation>(std::move(sigma));
  h.label_ = std::move(label);
  return h;
}

VarietyHandle VarietyHandle::all_monoids() { return presented(Presentation{}, "MON"); }

VarietyHandle VarietyHandle::meet(std::vector<VarietyHandle> components) {
  if (components.empty()) throw std::invalid_argument("meet of no varieties");
  VarietyHandle h;
  h.kind_ = Kind::kMeet;
  h.components_ = std::move(components);
  return h;
}

VarietyHandle VarietyHandle::join(std::vector<VarietyHandle> components) {
  if (components.empty()) throw std::invalid_argument("join of no varieties");
  VarietyHandle h;
  h.kind_ = Kind::kJoin;
  h.components_ = std::move(components);
  return h;
}

std::string VarietyHandle::describe() const {
  switch (kind_) {
    case Kind::kBuiltin: return std::string(name_of(builtin_));
    case Kind::kPresented: {
      if (!label_.empty()) return label_;
      std::string out = "var{";
      bool first = true;
      for (const auto& id : sigma_->identities()) {
        if (!first) out += ", ";
        first = false;
        out += format_identity(id);
      }
      return out + "}";
    }
    case Kind::kMeet:
    case Kind::kJoin: {
      std::string out = kind_ == Kind::kMeet ? "meet(" : "join(";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ",";
        out += components_[i].describe();
      }
      return out + ")";
    }
  }
  return "?";
}

Word c_normal_form(const Word& w) {
  std::vector<Variable> out;
  for (auto v : content(w)) out.insert(out.end(), std::min<std::size_t>(occ(w, v), 2), v);
  return Word(std::move(out));
}

Verdict satisfies(const VarietyHandle& h, const Identity& id,
                  const std::optional<SearchBounds>& bounds) {
  const Word& u = id.lhs();
  const Word& v = id.rhs();
  switch (h.kind()) {
    case VarietyHandle::Kind::kBuiltin:
      switch (h.builtin_kind()) {
        case BuiltinVariety::kTrivial: return Verdict::yes();
        case BuiltinVariety::kSemilattice: return Verdict::from_bool(content(u) == content(v));
        case BuiltinVariety::kCommutativeC:
          return Verdict::from_bool(c_normal_form(u) == c_normal_form(v));
        case BuiltinVariety::kLeftRegularBand: return Verdict::from_bool(ini(u) == ini(v));
        case BuiltinVariety::kRightRegularBand: return Verdict::from_bool(fin(u) == fin(v));
      }
      break;
    case VarietyHandle::Kind::kPresented: {
      if (id.trivial()) return Verdict::yes();
      const auto& sigma = h.presentation();
      if (is_proved(derive(sigma, u, v, bounds_or_default(bounds, sigma, u, v)))) {
        return Verdict::yes();
      }
      return Verdict::unknown(UnknownReason::kBounds);
    }
    case VarietyHandle::Kind::kJoin: {
      bool all_yes = true;
      for (const auto& c : h.components()) {
        Verdict cv = satisfies(c, id, bounds);
        if (cv.is_no()) return Verdict::no();
        all_yes = all_yes && cv.is_yes();
      }
      return all_yes ? Verdict::yes() : Verdict::unknown(UnknownReason::kComposition);
    }
    case VarietyHandle::Kind::kMeet: {
      for (const auto& c : h.components()) {
        if (satisfies(c, id, bounds).is_yes()) return Verdict::yes();
      }
      Presentation combined;
      for (const auto& c : h.components()) {
        auto sigma = presentation_of(c);
        if (!sigma) return Verdict::unknown(UnknownReason::kComposition);
        combined = Presentation::merged(combined, *sigma);
      }
      if (is_proved(derive(combined, u, v, bounds_or_default(bounds, combined, u, v)))) {
        return Verdict::yes();
      }
      return Verdict::unknown(UnknownReason::kBounds);
    }
  }
  return Verdict::unknown(UnknownReason::kComposition);
}

Verdict isoterm_for(const VarietyHandle& h, const Word& w,
                    const std::optional<SearchBounds>& bounds) {
  switch (h.kind()) {
    case VarietyHandle::Kind::kBuiltin:
      switch (h.builtin_kind()) {
        // Every word is T-equivalent to every other.
        case BuiltinVariety::kTrivial: return Verdict::no();
        // A non-empty w is equivalent to w·w[0] in SL, LRB and RRB.
        case BuiltinVariety::kSemilattice:
        case BuiltinVariety::kLeftRegularBand:
        case BuiltinVariety::kRightRegularBand: return Verdict::from_bool(w.empty());
        // x is alone in its C-class; anything longer has a repeated variable
        // (class contains a higher power) or two distinct ones (commute).
        case BuiltinVariety::kCommutativeC: return Verdict::from_bool(w.size() <= 1);
      }
      break;
    case VarietyHandle::Kind::kPresented:
      return Verdict::from_bool(isoterm_exact(w, h.presentation()));
    case VarietyHandle::Kind::kMeet: {
      bool all_yes = true;
      for (const auto& c : h.components()) {
        Verdict cv = isoterm_for(c, w, bounds);
        if (cv.is_no()) return Verdict::no();
        all_yes = all_yes && cv.is_yes();
      }
      return all_yes ? Verdict::yes() : Verdict::unknown(UnknownReason::kComposition);
    }
    case VarietyHandle::Kind::kJoin: {
      for (const auto& c : h.components()) {
        if (isoterm_for(c, w, bounds).is_yes()) return Verdict::yes();
      }
      const auto comps = h.components();
      for (std::size_t i = 0; i < comps.size(); ++i) {
        auto cls = finite_class(comps[i], w, bounds);
        if (!cls) continue;
        bool undecided = false;
        for (const Word& other : *cls) {
          if (other == w) continue;
          bool all_equal = true;
          for (std::size_t j = 0; j < comps.size() && all_equal; ++j) {
            if (j == i) continue;
            Verdict e = equivalent(comps[j], w, other, bounds);
            if (e.is_unknown()) undecided = true;
            all_equal = e.is_yes();
          }
          if (all_equal) return Verdict::no();
        }
        if (!undecided) return Verdict::yes();
      }
      return Verdict::unknown(UnknownReason::kComposition);
    }
  }
  return Verdict::unknown(UnknownReason::kComposition);
}

namespace {

template <class MakePair>
WitnessResult power_witness(const Presentation& sigma, std::size_t n_max,
                            const std::optional<SearchBounds>& bounds, MakePair make_pair) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  sigma.require_content_balanced();
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [u, v] = make_pair(n);
    if (is_proved(derive(sigma, u, v, bounds_or_default(bounds, sigma, u, v)))) {
      return Found{n};
    }
  }
  return NoneWithinBounds{};
}

}  // namespace

WitnessResult completely_regular_witness(const Presentation& sigma, std::size_t n_max,
                                         const std::optional<SearchBounds>& bounds) {
  const Word x{kX};
  return power_witness(sigma, n_max, bounds, [&](std::size_t n) {
    return std::pair{x, power(x, n + 1)};
  });
}

WitnessResult combinatorial_witness(const Presentation& sigma, std::size_t n_max,
                                    const std::optional<SearchBounds>& bounds) {
  const Word x{kX};
  return power_witness(sigma, n_max, bounds, [&](std::size_t n) {
    return std::pair{power(x, n), power(x, n + 1)};
  });
}

}  // namespace monvar
