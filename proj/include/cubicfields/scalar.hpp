#pragma once

#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cubicfields/high_real.hpp"

namespace cubicfields {

/// A real value that stays an exact rational for as long as every input was
/// rational, and degrades to a HighReal the first time an irrational operand
/// (or an inexact operation) enters.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value) : value_(mpq_class(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(mpq_class(value)) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value);                           // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& value) : value_(mpq_class(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(HighReal value) : value_(std::move(value)) {}          // NOLINT(google-explicit-constructor)

  static Scalar ratio(long num, long den);

  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  /// Requires is_exact().
  const mpq_class& exact() const { return std::get<mpq_class>(value_); }
  /// Precision of the inexact representation, 0 when exact.
  int digits() const noexcept;

  HighReal to_high(int digits) const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  /// True when exact and the denominator is one.
  bool is_integer() const;
  std::optional<mpz_class> as_integer() const;

  /// Exact rationals print as "n" or "n/d"; inexact values in fixed point.
  std::string to_string(int decimals = 30) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

 private:
  std::variant<mpq_class, HighReal> value_;
};

Scalar pow(const Scalar& x, long exponent);

/// Cube root of an exact rational when it is itself rational.
std::optional<mpq_class> exact_cbrt(const mpq_class& value);

/// Real-branch cube root. Stays exact for perfect rational cubes, otherwise
/// evaluated at `digits` (or the operand's own precision if larger).
Scalar real_cbrt(const Scalar& x, int digits);

/// Builds a Scalar from decimal text such as "-3", "1/6", "0.25" exactly.
std::optional<Scalar> parse_exact_scalar(const std::string& text);

}  // namespace cubicfields
