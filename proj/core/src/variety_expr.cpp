#include <cctype>

#include "monvar/variety.hpp"

namespace monvar {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  VarietyHandle parse() {
    VarietyHandle h = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return h;
  }

 private:
  VarietyHandle expr() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) fail("expected a file path after '@'");
      std::string path(text_.substr(start, pos_ - start));
      return VarietyHandle::presented(load_presentation(path), "@" + path);
    }
    std::string name = identifier();
    if (name == "T") return VarietyHandle::builtin(BuiltinVariety::kTrivial);
    if (name == "SL") return VarietyHandle::builtin(BuiltinVariety::kSemilattice);
    if (name == "C") return VarietyHandle::builtin(BuiltinVariety::kCommutativeC);
    if (name == "LRB") return VarietyHandle::builtin(BuiltinVariety::kLeftRegularBand);
    if (name == "RRB") return VarietyHandle::builtin(BuiltinVariety::kRightRegularBand);
    if (name == "MON") return VarietyHandle::all_monoids();
    if (name == "meet" || name == "join") {
      expect('(');
      std::vector<VarietyHandle> parts{expr()};
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(expr());
        skip_space();
      }
      expect(')');
      return name == "meet" ? VarietyHandle::meet(std::move(parts))
                            : VarietyHandle::join(std::move(parts));
    }
    fail("unknown variety '" + name + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a variety name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("variety expression '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VarietyHandle parse_variety(std::string_view expr) { return ExprParser(expr).parse(); }

}  // namespace monvar
