#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cubicfields/high_real.hpp"
#include "cubicfields/scalar.hpp"

namespace cubicfields {

/// Grammar (whitespace-insensitive):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ('^' integer)?
///   base   := number | 'pi' | func '(' expr ')' | '(' expr ')' | '-' base
///   func   := sqrt | cbrt | cos | sin | arctan | neg
///
/// Exponents are integers; fractional powers go through sqrt/cbrt so the
/// real branch is always explicit.
class Expression {
 public:
  enum class Kind { Number, Pi, Negate, Add, Subtract, Multiply, Divide, Power, Function };
  enum class Func { Sqrt, Cbrt, Cos, Sin, Arctan };

  static Expression number(std::string literal);
  static Expression pi();
  static Expression negate(Expression operand);
  static Expression binary(Kind kind, Expression lhs, Expression rhs);
  static Expression power(Expression base, long exponent);
  static Expression function(Func func, Expression argument);

  Kind kind() const noexcept { return node_->kind; }
  /// Literal text of a Number node.
  const std::string& literal() const noexcept { return node_->literal; }
  long exponent() const noexcept { return node_->exponent; }
  Func func() const noexcept { return node_->func; }
  const std::vector<Expression>& children() const noexcept { return node_->children; }

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node {
    Kind kind = Kind::Number;
    std::string literal;
    long exponent = 0;
    Func func = Func::Sqrt;
    std::vector<Expression> children;
  };
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws ParseError carrying the byte offset and the expected tokens.
Expression parse_expression(std::string_view text);

/// Canonical text; parse_expression(print_expression(e)) == e.
std::string print_expression(const Expression& expr);

/// Real-branch evaluation at `digits`. Throws EvaluationDomainError for sqrt of
/// a negative number or division by zero.
HighReal evaluate(const Expression& expr, int digits);

/// Exact when the tree only involves rationals (and perfect sqrt/cbrt
/// arguments), otherwise a HighReal at `digits`.
Scalar evaluate_scalar(const Expression& expr, int digits);

/// Parses then evaluates with evaluate_scalar.
Scalar parse_scalar(std::string_view text, int digits);

std::string_view function_name(Expression::Func func) noexcept;

}  // namespace cubicfields
