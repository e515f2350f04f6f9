#pragma once

#include <cstddef>
#include <string>

#include "gronwall/errors.hpp"
#include "gronwall/signal.hpp"

namespace gronwall {

/// Lexical or syntax error; `position` is the 0-based offset into the text.
class ExpressionError : public ArgumentError {
 public:
  ExpressionError(const std::string& msg, std::size_t position)
      : ArgumentError(msg + " at position " + std::to_string(position)),
        position(position) {}

  std::size_t position;
};

/// Parse an arithmetic expression in the variable t into a Signal.
///
/// Grammar (LL(1), standard precedence, unary minus binds tightest):
///   expression := term (('+' | '-') term)*
///   term       := factor (('*' | '/') factor)*
///   factor     := '-' factor | primary
///   primary    := number | 't' | func '(' expression ')' | '(' expression ')'
///   func       := sin | cos | exp | abs
///
/// Numbers are ordinary floating-point literals. Function arguments require
/// parentheses. Throws ExpressionError with the offending position.
Signal parse_signal_expression(const std::string& text);

}  // namespace gronwall
