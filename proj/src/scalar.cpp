#include "cubicfields/scalar.hpp"

#include <algorithm>

#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

// Precision used when two operands disagree: the larger inexact one wins.
int merged_digits(const Scalar& a, const Scalar& b) { return std::max(a.digits(), b.digits()); }

template <typename ExactOp, typename RealOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, RealOp real_op) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(exact_op(a.exact(), b.exact())));
  }
  const int digits = merged_digits(a, b);
  return Scalar(real_op(a.to_high(digits), b.to_high(digits)));
}

std::optional<mpz_class> exact_integer_cbrt(const mpz_class& value) {
  mpz_class root;
  mpz_class magnitude = abs(value);
  if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), 3) == 0) {
    return std::nullopt;
  }
  return value < 0 ? mpz_class(-root) : root;
}

}  // namespace

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) {
    throw Error(ErrorCode::EvaluationDomainError, "zero denominator");
  }
  return Scalar(mpq_class(num, den));
}

int Scalar::digits() const noexcept {
  if (const auto* real = std::get_if<HighReal>(&value_)) {
    return real->digits();
  }
  return 0;
}

HighReal Scalar::to_high(int digits) const {
  if (is_exact()) {
    return HighReal(exact(), digits);
  }
  return std::get<HighReal>(value_).with_digits(std::max(digits, this->digits()));
}

double Scalar::to_double() const {
  return is_exact() ? exact().get_d() : std::get<HighReal>(value_).to_double();
}

int Scalar::sign() const {
  return is_exact() ? sgn(exact()) : std::get<HighReal>(value_).sign();
}

bool Scalar::is_integer() const { return is_exact() && exact().get_den() == 1; }

std::optional<mpz_class> Scalar::as_integer() const {
  if (!is_integer()) return std::nullopt;
  return exact().get_num();
}

std::string Scalar::to_string(int decimals) const {
  if (is_exact()) {
    return exact().get_str();
  }
  return std::get<HighReal>(value_).to_fixed(decimals);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::plus<>{}, std::plus<>{});
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::minus<>{}, std::minus<>{});
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::multiplies<>{}, std::multiplies<>{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::EvaluationDomainError, "division by zero");
  }
  return combine(a, b, std::divides<>{}, std::divides<>{});
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return Scalar(mpq_class(-a.exact()));
  return Scalar(-std::get<HighReal>(a.value_));
}

Scalar pow(const Scalar& x, long exponent) {
  if (exponent < 0 && x.is_zero()) {
    throw Error(ErrorCode::EvaluationDomainError, "negative power of zero");
  }
  if (!x.is_exact()) {
    return Scalar(pow(x.to_high(x.digits()), exponent));
  }
  mpz_class num;
  mpz_class den;
  const auto magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(num.get_mpz_t(), x.exact().get_num_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), x.exact().get_den_mpz_t(), magnitude);
  return exponent < 0 ? Scalar(mpq_class(den, num)) : Scalar(mpq_class(num, den));
}

std::optional<mpq_class> exact_cbrt(const mpq_class& value) {
  auto num = exact_integer_cbrt(value.get_num());
  auto den = exact_integer_cbrt(value.get_den());
  if (!num || !den) return std::nullopt;
  return mpq_class(*num, *den);
}

Scalar real_cbrt(const Scalar& x, int digits) {
  if (x.is_exact()) {
    if (auto root = exact_cbrt(x.exact())) {
      return Scalar(*root);
    }
  }
  return Scalar(real_cbrt(x.to_high(std::max(digits, x.digits()))));
}

std::optional<Scalar> parse_exact_scalar(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = parse_exact_scalar(text.substr(0, slash));
    auto den = parse_exact_scalar(text.substr(slash + 1));
    if (!num || !den || den->is_zero()) return std::nullopt;
    return *num / *den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty()) return std::nullopt;
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  mpq_class value(num, den);
  value.canonicalize();
  return Scalar(negative ? mpq_class(-value) : value);
}

}  // namespace cubicfields
