#ifndef NAD_SET_EXPR_HPP
#define NAD_SET_EXPR_HPP

#include <stdexcept>
#include <string>

#include "nad/shift_space.hpp"

namespace nad {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Grammar:
//   expr   := term { ("+" | "-") term }          left associative
//   term   := factor { "&" factor }
//   factor := "~" factor | atom
//   atom   := "U:" digits | "ALL" | "EMPTY" | "(" expr ")"
// "+" union, "&" intersection, "-" difference, "~" complement;
// precedence ~ > & > (+,-); digits are base-p symbols.
ClopenSet parse_set_expr(const std::string& text, const Alphabet& alphabet);

}  // namespace nad

#endif
