#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

#include "cubicfields/high_real.hpp"
#include "cubicfields/scalar.hpp"

namespace cubicfields {

/// a3*x^3 + a2*x^2 + a1*x + a0 with a3 != 0.
class Cubic {
 public:
  Cubic(Scalar a3, Scalar a2, Scalar a1, Scalar a0);

  const Scalar& a3() const noexcept { return coeffs_[0]; }
  const Scalar& a2() const noexcept { return coeffs_[1]; }
  const Scalar& a1() const noexcept { return coeffs_[2]; }
  const Scalar& a0() const noexcept { return coeffs_[3]; }
  /// Leading coefficient first.
  const std::array<Scalar, 4>& coefficients() const noexcept { return coeffs_; }

  bool is_exact() const;
  bool is_monic() const;
  Cubic monic() const;

  Scalar evaluate(const Scalar& x) const;
  HighReal evaluate(const HighReal& x) const;
  HighReal derivative(const HighReal& x) const;

  /// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
  Scalar discriminant() const;

  /// Human-readable form, e.g. "x^3 + x^2 - 2*x - 1".
  std::string to_string(int decimals = 30) const;

 private:
  std::array<Scalar, 4> coeffs_;
};

bool approx_equal(const Cubic& a, const Cubic& b, const PrecisionPolicy& policy);

/// (h, s) parametrisation of x^3 + h*s*x^2 - (h+3)*s^2*x + s^3.
struct RcpParams {
  Scalar h;
  Scalar s;
};

/// Exact 3x3 integer matrix.
class IntegerMatrix3 {
 public:
  using Row = std::array<mpz_class, 3>;

  IntegerMatrix3() = default;
  explicit IntegerMatrix3(std::array<Row, 3> entries) : entries_(std::move(entries)) {}
  static IntegerMatrix3 identity();

  const mpz_class& operator()(int row, int col) const { return entries_[row][col]; }
  mpz_class& operator()(int row, int col) { return entries_[row][col]; }

  mpz_class trace() const;
  mpz_class determinant() const;
  /// Sum of principal 2x2 minors, i.e. the trace of the adjugate.
  mpz_class adjugate_trace() const;

  friend IntegerMatrix3 operator*(const IntegerMatrix3& a, const IntegerMatrix3& b);
  friend bool operator==(const IntegerMatrix3& a, const IntegerMatrix3& b) { return a.entries_ == b.entries_; }

 private:
  std::array<Row, 3> entries_{};
};

/// Binary exponentiation, exact.
IntegerMatrix3 power(const IntegerMatrix3& m, unsigned long exponent);

/// rho(h, s, x) = x^3 + hs x^2 - (h+3) s^2 x + s^3. Throws InvalidScale if s == 0.
Cubic build_rcp(const RcpParams& params);

/// Coefficient relation p*r^(1/3) + 3 r^(2/3) + q == 0 (real cube roots), to
/// 10^-target_digits. Reality of the zeros is not checked here.
bool is_rcp(const Scalar& p, const Scalar& q, const Scalar& r, const PrecisionPolicy& policy);
bool is_rcp(const Cubic& monic_cubic, const PrecisionPolicy& policy);

/// s = cbrt(r), h = p/s, with q validated against -(h+3)s^2. Throws NotAnRcp.
RcpParams rcp_params_from_coeffs(const Scalar& p, const Scalar& q, const Scalar& r,
                                 const PrecisionPolicy& policy);

/// rho(h, -1, x) = x^3 - h x^2 - (h+3) x - 1.
Cubic build_scp(const Scalar& h);

/// The monic cubic with zeros r^(1/3)/(2-gamma), (gamma-1) r^(1/3) and
/// ((2-gamma)/(1-gamma)) r^(1/3). Throws DegenerateGamma for gamma in {1, 2}.
Cubic build_rcp_witula(const Scalar& gamma, const Scalar& r, const PrecisionPolicy& policy);

/// h^2 + 3h + 9.
Scalar tau(const Scalar& h);

/// Rows (0,1,0), (0,0,1), (1,3+h,h); its characteristic polynomial is build_scp(h).
IntegerMatrix3 companion_matrix(const mpz_class& h);

}  // namespace cubicfields
