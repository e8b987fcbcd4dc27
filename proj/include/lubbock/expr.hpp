/**
 * @file expr.hpp
 * @brief Minimal arithmetic expression parser for test functions.
 *
 * Grammar (recursive descent):
 *   expr    := term (('+'|'-') term)*
 *   term    := unary (('*'|'/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' unary)?          (right-associative)
 *   primary := NUMBER | 'x' | FUNC '(' expr ')' | '(' expr ')'
 * Functions: sin cos tan exp log sqrt sinh cosh tanh abs. No implicit
 * multiplication, no user-defined functions. Trees evaluate in double
 * precision always, and in exact rational arithmetic when the tree is
 * rational-closed and every exponent reached is an integer.
 */
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "lubbock/rational.hpp"

namespace lubbock {

/// Syntax error with the byte offset where parsing stopped.
struct ExprError : std::runtime_error {
  size_t position;
  ExprError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Raised by exact evaluation when the tree requires floating point.
struct ExactEvalError : std::runtime_error {
  explicit ExactEvalError(const std::string& msg) : std::runtime_error(msg) {}
};

class Expr {
 public:
  /// Parses per the grammar; throws ExprError on failure.
  static Expr parse(const std::string& text);

  double eval(double x) const;

  /// Exact evaluation; throws ExactEvalError on transcendental functions or
  /// non-integer exponents, and domain_error on division by zero.
  Rational eval_exact(const Rational& x) const;

  /// True when the tree contains no transcendental function (only +,-,*,/,^,
  /// abs, numbers, x), so exact evaluation can succeed at integer exponents.
  bool rational_closed() const;

  /// Fully parenthesized round-trippable rendering.
  std::string to_string() const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
};

}  // namespace lubbock
