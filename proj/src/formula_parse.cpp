#include <cctype>
#include <optional>

#include "qtruth/logic.hpp"

namespace qtruth {

namespace {

// Grammar:  or   := and ('|' and)*
//           and  := unary ('&' unary)*
//           unary:= '!' unary | '(' or ')' | atom-label
class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, Projector>& atoms)
      : text_(text), atoms_(atoms) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw FormulaParseError("unexpected trailing input at position " +
                              std::to_string(pos_));
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (accept('|')) f = std::move(f) | parse_and();
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept('&')) f = std::move(f) & parse_unary();
    return f;
  }

  Formula parse_unary() {
    if (accept('!')) return !parse_unary();
    if (accept('(')) {
      Formula f = parse_or();
      if (!accept(')')) throw FormulaParseError("missing ')'");
      return f;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      throw FormulaParseError("expected an atom label at position " +
                              std::to_string(start));
    const std::string label = text_.substr(start, pos_ - start);
    auto it = atoms_.find(label);
    if (it == atoms_.end())
      throw FormulaParseError("unknown atom '" + label + "'");
    return Formula::atom(it->second, label);
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  const std::map<std::string, Projector>& atoms_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text,
                      const std::map<std::string, Projector>& atoms) {
  return Parser(text, atoms).parse();
}

}  // namespace qtruth
