#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace cubicfields {

inline constexpr int kMinDigits = 10;
inline constexpr int kDefaultGuardDigits = 20;

/// Arbitrary-precision real backed by MPFR.
///
/// Every value carries its own precision, expressed in decimal digits. The
/// result of a binary operation takes the larger precision of its operands, so
/// precision is threaded explicitly through computations and never read from
/// ambient state. All operations round to nearest.
class HighReal {
 public:
  explicit HighReal(int digits = kMinDigits);
  HighReal(long value, int digits);
  HighReal(const mpz_class& value, int digits);
  HighReal(const mpq_class& value, int digits);

  /// Parses a decimal or scientific literal ("1.5", "-2e-30").
  static HighReal parse(std::string_view text, int digits);
  static HighReal pi(int digits);
  /// 10^exponent, correctly rounded.
  static HighReal pow10(long exponent, int digits);

  HighReal(const HighReal& other);
  HighReal(HighReal&& other) noexcept;
  HighReal& operator=(const HighReal& other);
  HighReal& operator=(HighReal&& other) noexcept;
  ~HighReal();

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded to a different working precision.
  HighReal with_digits(int digits) const;

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  /// Fixed-point rendering with exactly `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Scientific rendering with `significant` digits, e.g. "1.25e-41".
  std::string to_sci(int significant = 3) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get_mut() noexcept { return value_; }

  HighReal& operator+=(const HighReal& rhs);
  HighReal& operator-=(const HighReal& rhs);
  HighReal& operator*=(const HighReal& rhs);
  HighReal& operator/=(const HighReal& rhs);

  friend HighReal operator+(const HighReal& a, const HighReal& b);
  friend HighReal operator-(const HighReal& a, const HighReal& b);
  friend HighReal operator*(const HighReal& a, const HighReal& b);
  friend HighReal operator/(const HighReal& a, const HighReal& b);
  friend HighReal operator-(const HighReal& a);

  friend HighReal operator+(const HighReal& a, long b);
  friend HighReal operator-(const HighReal& a, long b);
  friend HighReal operator*(const HighReal& a, long b);
  friend HighReal operator/(const HighReal& a, long b);
  friend HighReal operator+(long a, const HighReal& b) { return b + a; }
  friend HighReal operator-(long a, const HighReal& b);
  friend HighReal operator*(long a, const HighReal& b) { return b * a; }
  friend HighReal operator/(long a, const HighReal& b);

  friend bool operator==(const HighReal& a, const HighReal& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const HighReal& a, const HighReal& b) noexcept;
  friend std::partial_ordering operator<=>(const HighReal& a, long b) noexcept;
  friend bool operator==(const HighReal& a, long b) noexcept { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
  int digits_;
};

mpfr_prec_t digits_to_bits(int digits);

HighReal abs(const HighReal& x);
HighReal sqrt(const HighReal& x);
HighReal cos(const HighReal& x);
HighReal sin(const HighReal& x);
HighReal atan(const HighReal& x);
HighReal pow(const HighReal& x, long exponent);

/// Real-branch cube root: sign(x)*|x|^(1/3). Exactly odd.
HighReal real_cbrt(const HighReal& x);

/// Arctangent of num/den with the limit conventions used by the root formulas:
/// den > 0 or den < 0 gives the principal value of the quotient, den == 0 gives
/// sign(num)*pi/2. Throws DegenerateAngle when both are zero.
HighReal branch_arctan(const HighReal& num, const HighReal& den);

/// Working precision split: identities are asserted at `target_digits` while
/// arithmetic runs with `guard_digits` more.
struct PrecisionPolicy {
  int target_digits = 50;
  int guard_digits = kDefaultGuardDigits;

  PrecisionPolicy() = default;
  explicit PrecisionPolicy(int target, int guard = kDefaultGuardDigits);

  int working_digits() const noexcept { return target_digits + guard_digits; }
  /// 10^(-target_digits) at working precision.
  HighReal tolerance() const;
  bool equal(const HighReal& a, const HighReal& b) const;
  bool negligible(const HighReal& a) const;
};

}  // namespace cubicfields
