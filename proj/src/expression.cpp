#include "cubicfields/expression.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <utility>

#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

using Kind = Expression::Kind;
using Func = Expression::Func;

struct NamedFunc {
  std::string_view name;
  Func func;
};

constexpr std::array<NamedFunc, 5> kFunctions{{
    {"sqrt", Func::Sqrt},
    {"cbrt", Func::Cbrt},
    {"cos", Func::Cos},
    {"sin", Func::Sin},
    {"arctan", Func::Arctan},
}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string message = "at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    message += pos_ < text_.size() ? ", found '" + std::string(1, text_[pos_]) + "'" : ", found end of input";
    throw ParseError(pos_, std::move(expected), message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expression::binary(Kind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = Expression::binary(Kind::Subtract, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expression term() {
    Expression lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expression::binary(Kind::Multiply, std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = Expression::binary(Kind::Divide, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expression factor() {
    Expression b = base();
    if (accept('^')) {
      return Expression::power(std::move(b), integer());
    }
    return b;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_start || pos_ - digits_start > 9) {
      pos_ = start;
      fail({"integer exponent"});
    }
    const long magnitude = std::stol(std::string(text_.substr(digits_start, pos_ - digits_start)));
    return negative ? -magnitude : magnitude;
  }

  Expression base() {
    skip_space();
    if (pos_ >= text_.size()) fail({"number", "'pi'", "function", "'('", "'-'"});
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return Expression::negate(base());
    }
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail({"number", "'pi'", "function", "'('", "'-'"});
  }

  Expression number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t fraction = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == fraction) fail({"digit"});
    }
    return Expression::number(std::string(text_.substr(start, pos_ - start)));
  }

  Expression named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "pi") return Expression::pi();
    if (word == "neg") {
      expect('(');
      Expression inner = expr();
      expect(')');
      return Expression::negate(std::move(inner));
    }
    for (const auto& [name, func] : kFunctions) {
      if (word == name) {
        expect('(');
        Expression inner = expr();
        expect(')');
        return Expression::function(func, std::move(inner));
      }
    }
    pos_ = start;
    fail({"'pi'", "sqrt", "cbrt", "cos", "sin", "arctan", "neg"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expression& e) {
  switch (e.kind()) {
    case Kind::Add:
    case Kind::Subtract: return 1;
    case Kind::Multiply:
    case Kind::Divide: return 2;
    case Kind::Negate: return 3;
    case Kind::Power: return 4;
    default: return 5;
  }
}

std::string binary_symbol(Kind kind) {
  switch (kind) {
    case Kind::Add: return " + ";
    case Kind::Subtract: return " - ";
    case Kind::Multiply: return "*";
    case Kind::Divide: return "/";
    default: return "?";
  }
}

std::string wrap(const std::string& text) { return "(" + text + ")"; }

void require_nonzero_divisor(bool zero) {
  if (zero) throw Error(ErrorCode::EvaluationDomainError, "division by zero");
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  return mpq_class(sqrt(q.get_num()), sqrt(q.get_den()));
}

}  // namespace

Expression Expression::number(std::string literal) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Number;
  node->literal = std::move(literal);
  return Expression(std::move(node));
}

Expression Expression::pi() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pi;
  return Expression(std::move(node));
}

Expression Expression::negate(Expression operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Negate;
  node->children.push_back(std::move(operand));
  return Expression(std::move(node));
}

Expression Expression::binary(Kind kind, Expression lhs, Expression rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Expression(std::move(node));
}

Expression Expression::power(Expression base, long exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Power;
  node->exponent = exponent;
  node->children.push_back(std::move(base));
  return Expression(std::move(node));
}

Expression Expression::function(Func func, Expression argument) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Function;
  node->func = func;
  node->children.push_back(std::move(argument));
  return Expression(std::move(node));
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.children.size() != y.children.size()) return false;
  switch (x.kind) {
    case Kind::Number:
      if (x.literal != y.literal) return false;
      break;
    case Kind::Power:
      if (x.exponent != y.exponent) return false;
      break;
    case Kind::Function:
      if (x.func != y.func) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

std::string_view function_name(Func func) noexcept {
  for (const auto& [name, f] : kFunctions) {
    if (f == func) return name;
  }
  return "?";
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expression& e) {
  switch (e.kind()) {
    case Kind::Number: return e.literal();
    case Kind::Pi: return "pi";
    case Kind::Function:
      return std::string(function_name(e.func())) + "(" + print_expression(e.children()[0]) + ")";
    case Kind::Negate: {
      const Expression& operand = e.children()[0];
      const std::string inner = print_expression(operand);
      return "-" + (precedence(operand) >= 5 || operand.kind() == Kind::Negate ? inner : wrap(inner));
    }
    case Kind::Power: {
      const Expression& b = e.children()[0];
      const std::string inner = print_expression(b);
      return (precedence(b) >= 5 ? inner : wrap(inner)) + "^" + std::to_string(e.exponent());
    }
    default: {
      const Expression& lhs = e.children()[0];
      const Expression& rhs = e.children()[1];
      const int own = precedence(e);
      std::string left = print_expression(lhs);
      std::string right = print_expression(rhs);
      if (precedence(lhs) < own) left = wrap(left);
      if (precedence(rhs) <= own) right = wrap(right);
      return left + binary_symbol(e.kind()) + right;
    }
  }
}

HighReal evaluate(const Expression& e, int digits) {
  switch (e.kind()) {
    case Kind::Number: return parse_exact_scalar(e.literal())->to_high(digits);
    case Kind::Pi: return HighReal::pi(digits);
    case Kind::Negate: return -evaluate(e.children()[0], digits);
    case Kind::Power: return pow(evaluate(e.children()[0], digits), e.exponent());
    case Kind::Function: {
      const HighReal arg = evaluate(e.children()[0], digits);
      switch (e.func()) {
        case Func::Sqrt: return sqrt(arg);
        case Func::Cbrt: return real_cbrt(arg);
        case Func::Cos: return cos(arg);
        case Func::Sin: return sin(arg);
        case Func::Arctan: return atan(arg);
      }
      break;
    }
    default: {
      const HighReal lhs = evaluate(e.children()[0], digits);
      const HighReal rhs = evaluate(e.children()[1], digits);
      switch (e.kind()) {
        case Kind::Add: return lhs + rhs;
        case Kind::Subtract: return lhs - rhs;
        case Kind::Multiply: return lhs * rhs;
        case Kind::Divide:
          require_nonzero_divisor(rhs.is_zero());
          return lhs / rhs;
        default: break;
      }
    }
  }
  throw Error(ErrorCode::EvaluationDomainError, "unsupported expression node");
}

Scalar evaluate_scalar(const Expression& e, int digits) {
  switch (e.kind()) {
    case Kind::Number: return *parse_exact_scalar(e.literal());
    case Kind::Pi: return Scalar(HighReal::pi(digits));
    case Kind::Negate: return -evaluate_scalar(e.children()[0], digits);
    case Kind::Power: return pow(evaluate_scalar(e.children()[0], digits), e.exponent());
    case Kind::Function: {
      const Scalar arg = evaluate_scalar(e.children()[0], digits);
      if (e.func() == Func::Cbrt) return real_cbrt(arg, digits);
      if (e.func() == Func::Sqrt && arg.is_exact()) {
        if (auto root = exact_sqrt(arg.exact())) return Scalar(*root);
      }
      if (arg.is_exact() && arg.is_zero()) {
        // sqrt, sin and arctan vanish at 0; cos(0) = 1
        return e.func() == Func::Cos ? Scalar(1) : Scalar(0);
      }
      return Scalar(evaluate(e, digits));
    }
    default: {
      const Scalar lhs = evaluate_scalar(e.children()[0], digits);
      const Scalar rhs = evaluate_scalar(e.children()[1], digits);
      switch (e.kind()) {
        case Kind::Add: return lhs + rhs;
        case Kind::Subtract: return lhs - rhs;
        case Kind::Multiply: return lhs * rhs;
        case Kind::Divide: return lhs / rhs;
        default: break;
      }
    }
  }
  throw Error(ErrorCode::EvaluationDomainError, "unsupported expression node");
}

Scalar parse_scalar(std::string_view text, int digits) { return evaluate_scalar(parse_expression(text), digits); }

}  // namespace cubicfields
