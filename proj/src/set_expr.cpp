#include "nad/set_expr.hpp"

#include <cctype>

namespace nad {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& a) : text_(text), alphabet_(a) {}

  ClopenSet run() {
    ClopenSet s = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  ClopenSet expr() {
    ClopenSet s = term();
    for (;;) {
      if (eat('+')) {
        s = s.unite(term());
      } else if (eat('-')) {
        s = s.subtract(term());
      } else {
        return s;
      }
    }
  }

  ClopenSet term() {
    ClopenSet s = factor();
    while (eat('&')) s = s.intersect(factor());
    return s;
  }

  ClopenSet factor() {
    if (eat('~')) return factor().complement();
    return atom();
  }

  ClopenSet atom() {
    skip_ws();
    std::size_t start = pos_;
    if (eat_word("U:")) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_++]);
      }
      if (digits.empty()) throw ParseError("expected digits after 'U:'", pos_);
      return ClopenSet::cylinder(alphabet_, FiniteWord::parse(digits, alphabet_));
    }
    if (eat_word("ALL")) return ClopenSet::full(alphabet_);
    if (eat_word("EMPTY")) return ClopenSet::empty(alphabet_);
    if (eat('(')) {
      ClopenSet s = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return s;
    }
    throw ParseError("expected 'U:', 'ALL', 'EMPTY' or '('", start);
  }

  const std::string& text_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

ClopenSet parse_set_expr(const std::string& text, const Alphabet& alphabet) {
  return Parser(text, alphabet).run();
}

}  // namespace nad
