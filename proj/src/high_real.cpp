#include "cubicfields/high_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

void check_digits(int digits) {
  if (digits < kMinDigits) {
    throw Error(ErrorCode::InvalidPrecision,
                "precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                    std::to_string(digits));
  }
}

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

// Strip a leading '-' when every digit is zero.
void normalize_negative_zero(std::string& text) {
  if (!text.empty() && text.front() == '-' &&
      text.find_first_not_of("0.", 1) == std::string::npos) {
    text.erase(0, 1);
  }
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

HighReal::HighReal(int digits) : digits_(digits) {
  check_digits(digits);
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

HighReal::HighReal(long value, int digits) : HighReal(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

HighReal::HighReal(const mpz_class& value, int digits) : HighReal(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

HighReal::HighReal(const mpq_class& value, int digits) : HighReal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

HighReal HighReal::parse(std::string_view text, int digits) {
  HighReal out(digits);
  std::string buffer(text);
  char* end = nullptr;
  if (!buffer.empty()) {
    mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  }
  if (buffer.empty() || end != buffer.c_str() + buffer.size()) {
    throw Error(ErrorCode::ParseError, "not a decimal literal: '" + buffer + "'");
  }
  return out;
}

HighReal HighReal::pi(int digits) {
  HighReal out(digits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

HighReal HighReal::pow10(long exponent, int digits) {
  HighReal out(digits);
  mpfr_set_si(out.value_, 10, MPFR_RNDN);
  mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

HighReal::HighReal(const HighReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HighReal::HighReal(HighReal&& other) noexcept : digits_(other.digits_) {
  // MPFR has no move primitive; swap with a freshly initialised minimum value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

HighReal& HighReal::operator=(const HighReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

HighReal& HighReal::operator=(HighReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

HighReal::~HighReal() { mpfr_clear(value_); }

HighReal HighReal::with_digits(int digits) const {
  HighReal out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

mpz_class HighReal::round_to_integer() const {
  HighReal rounded(*this);
  mpfr_round(rounded.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), rounded.value_, MPFR_RNDN);
  return out;
}

std::string HighReal::to_fixed(int decimals) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNf", decimals, value_);
  std::string out = take_mpfr_string(raw);
  normalize_negative_zero(out);
  return out;
}

std::string HighReal::to_sci(int significant) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNe", std::max(significant - 1, 0), value_);
  return take_mpfr_string(raw);
}

#define CF_COMPOUND(op, fn)                                         \
  HighReal& HighReal::operator op(const HighReal& rhs) {            \
    if (rhs.digits_ > digits_) {                                    \
      mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN); \
      digits_ = rhs.digits_;                                        \
    }                                                               \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                      \
    return *this;                                                   \
  }

CF_COMPOUND(+=, mpfr_add)
CF_COMPOUND(-=, mpfr_sub)
CF_COMPOUND(*=, mpfr_mul)
CF_COMPOUND(/=, mpfr_div)
#undef CF_COMPOUND

#define CF_BINARY(op, fn)                                            \
  HighReal operator op(const HighReal& a, const HighReal& b) {       \
    HighReal out(std::max(a.digits_, b.digits_));                    \
    fn(out.value_, a.value_, b.value_, MPFR_RNDN);                   \
    return out;                                                      \
  }                                                                  \
  HighReal operator op(const HighReal& a, long b) {                  \
    HighReal out(a.digits_);                                         \
    fn##_si(out.value_, a.value_, b, MPFR_RNDN);                     \
    return out;                                                      \
  }

CF_BINARY(+, mpfr_add)
CF_BINARY(-, mpfr_sub)
CF_BINARY(*, mpfr_mul)
CF_BINARY(/, mpfr_div)
#undef CF_BINARY

HighReal operator-(const HighReal& a) {
  HighReal out(a.digits_);
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

HighReal operator-(long a, const HighReal& b) {
  HighReal out(b.digits_);
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

HighReal operator/(long a, const HighReal& b) {
  HighReal out(b.digits_);
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const HighReal& a, const HighReal& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const HighReal& a, long b) noexcept {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define CF_UNARY(name, fn)                            \
  HighReal name(const HighReal& x) {                  \
    HighReal out(x.digits());                         \
    fn(out.get_mut(), x.get(), MPFR_RNDN);            \
    return out;                                       \
  }

CF_UNARY(abs, mpfr_abs)
CF_UNARY(cos, mpfr_cos)
CF_UNARY(sin, mpfr_sin)
CF_UNARY(atan, mpfr_atan)
CF_UNARY(real_cbrt, mpfr_cbrt)
#undef CF_UNARY

HighReal sqrt(const HighReal& x) {
  if (x.sign() < 0) {
    throw Error(ErrorCode::EvaluationDomainError, "square root of a negative number");
  }
  HighReal out(x.digits());
  mpfr_sqrt(out.get_mut(), x.get(), MPFR_RNDN);
  return out;
}

HighReal pow(const HighReal& x, long exponent) {
  if (exponent < 0 && x.is_zero()) {
    throw Error(ErrorCode::EvaluationDomainError, "negative power of zero");
  }
  HighReal out(x.digits());
  mpfr_pow_si(out.get_mut(), x.get(), exponent, MPFR_RNDN);
  return out;
}

HighReal branch_arctan(const HighReal& num, const HighReal& den) {
  if (num.is_zero() && den.is_zero()) {
    throw Error(ErrorCode::DegenerateAngle, "arctan(0/0) is undefined");
  }
  if (den.is_zero()) {
    HighReal half_pi = HighReal::pi(std::max(num.digits(), den.digits())) / 2;
    return num.sign() > 0 ? half_pi : -half_pi;
  }
  return atan(num / den);
}

// The target may be small ("equal to 4 digits"); only the working precision
// has to clear the HighReal floor.
PrecisionPolicy::PrecisionPolicy(int target, int guard) : target_digits(target), guard_digits(guard) {
  if (target < 1 || guard < 0) {
    throw Error(ErrorCode::InvalidPrecision, "target digits must be positive and guard digits non-negative");
  }
  check_digits(target + guard);
}

HighReal PrecisionPolicy::tolerance() const { return HighReal::pow10(-target_digits, working_digits()); }

bool PrecisionPolicy::equal(const HighReal& a, const HighReal& b) const { return negligible(a - b); }

bool PrecisionPolicy::negligible(const HighReal& a) const { return abs(a) < tolerance(); }

}  // namespace cubicfields
