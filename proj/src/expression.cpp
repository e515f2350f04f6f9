#include "gronwall/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <string_view>
#include <utility>

namespace gronwall {

namespace {

using Fn = std::function<double(double)>;

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ExpressionError(msg, at);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  Fn parse_expression() {
    Fn lhs = parse_term();
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') return lhs;
      ++pos;
      Fn rhs = parse_term();
      if (op == '+')
        lhs = [l = std::move(lhs), r = std::move(rhs)](double t) { return l(t) + r(t); };
      else
        lhs = [l = std::move(lhs), r = std::move(rhs)](double t) { return l(t) - r(t); };
    }
  }

  Fn parse_term() {
    Fn lhs = parse_factor();
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '*' && op != '/') return lhs;
      ++pos;
      Fn rhs = parse_factor();
      if (op == '*')
        lhs = [l = std::move(lhs), r = std::move(rhs)](double t) { return l(t) * r(t); };
      else
        lhs = [l = std::move(lhs), r = std::move(rhs)](double t) { return l(t) / r(t); };
    }
  }

  Fn parse_factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos;
      Fn inner = parse_factor();
      return [f = std::move(inner)](double t) { return -f(t); };
    }
    return parse_primary();
  }

  Fn parse_primary() {
    skip_ws();
    if (eof()) fail("unexpected end of expression");
    const char ch = peek();
    if (ch == '(') {
      ++pos;
      Fn inner = parse_expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return parse_identifier();
    fail(std::string("unexpected character '") + ch + "'");
  }

  Fn parse_number() {
    double value = 0.0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::invalid_argument) fail("invalid numeric literal");
    if (ec == std::errc::result_out_of_range) fail("numeric literal out of range");
    pos = static_cast<std::size_t>(ptr - text.data());
    return [value](double) { return value; };
  }

  Fn parse_identifier() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    const std::string_view name = text.substr(start, pos - start);
    if (name == "t") return [](double t) { return t; };

    double (*fn)(double) = nullptr;
    if (name == "sin") fn = std::sin;
    else if (name == "cos") fn = std::cos;
    else if (name == "exp") fn = std::exp;
    else if (name == "abs") fn = std::fabs;
    if (fn == nullptr)
      fail_at("unknown identifier '" + std::string(name) + "'", start);

    skip_ws();
    if (peek() != '(')
      fail("expected '(' after function name '" + std::string(name) + "'");
    ++pos;
    Fn arg = parse_expression();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos;
    return [fn, a = std::move(arg)](double t) { return fn(a(t)); };
  }
};

}  // namespace

Signal parse_signal_expression(const std::string& text) {
  Parser parser{text, 0};
  Fn fn = parser.parse_expression();
  parser.skip_ws();
  if (!parser.eof()) parser.fail("unexpected trailing input");
  return Signal::from_function(std::move(fn));
}

}  // namespace gronwall
