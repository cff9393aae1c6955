#pragma once

#include <string_view>

#include "wnov/magma.hpp"

namespace wnov {

  // Grammar (whitespace is insignificant):
  //   expr   := term (("+" | "-") term)*
  //   term   := ["-"] [int ["/" int]] factor ["*" factor]
  //   factor := atom | "(" expr ["*" expr] ")"
  //           | "A(" expr "," expr "," expr ")" | "C(" expr "," expr ")"
  //           | "O(" expr "," expr ")" | "T(" expr "," expr "," expr "," expr ")"
  //   atom   := "x" int | "v" int
  // A product has exactly two operands: "a*b*c" is rejected. A lone "0" is
  // the zero polynomial. Coefficients are rationals.
  MagmaPoly parse_expr(std::string_view text);

  // Expression over generators only.
  MagmaPoly parse_generator_expr(std::string_view text);

  // "<lhs> = <rhs>" over variables only; returns lhs - rhs. A bare
  // expression is read as "<expr> = 0".
  MagmaPoly parse_identity(std::string_view text);

}  // namespace wnov
