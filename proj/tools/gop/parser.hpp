#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "gop/errors.hpp"
#include "gop/orealg/ore_operator.hpp"

namespace gop::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' natural)?
//   atom   := natural | 'z' | 'D' | 'theta' | '(' expr ')'
// Products are compositions (D*z = z*D + 1). Division is only allowed by
// D-free expressions and multiplies on the right by the inverse.
OreOperator parse_operator(std::string_view text);

}  // namespace gop::cli
