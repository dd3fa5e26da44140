#include "cubicfields/cubic.hpp"

#include <algorithm>
#include <sstream>

#include "cubicfields/errors.hpp"

namespace cubicfields {

Cubic::Cubic(Scalar a3, Scalar a2, Scalar a1, Scalar a0)
    : coeffs_{std::move(a3), std::move(a2), std::move(a1), std::move(a0)} {
  if (coeffs_[0].is_zero()) {
    throw Error(ErrorCode::NotCubic, "leading coefficient is zero");
  }
}

bool Cubic::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

bool Cubic::is_monic() const { return coeffs_[0].is_exact() && coeffs_[0].exact() == 1; }

Cubic Cubic::monic() const {
  if (is_monic()) return *this;
  const Scalar& lead = coeffs_[0];
  return Cubic(Scalar(1), coeffs_[1] / lead, coeffs_[2] / lead, coeffs_[3] / lead);
}

Scalar Cubic::evaluate(const Scalar& x) const {
  return ((coeffs_[0] * x + coeffs_[1]) * x + coeffs_[2]) * x + coeffs_[3];
}

HighReal Cubic::evaluate(const HighReal& x) const {
  const int d = x.digits();
  HighReal acc = coeffs_[0].to_high(d);
  for (int i = 1; i < 4; ++i) {
    acc *= x;
    acc += coeffs_[i].to_high(d);
  }
  return acc;
}

HighReal Cubic::derivative(const HighReal& x) const {
  const int d = x.digits();
  return (coeffs_[0].to_high(d) * 3 * x + coeffs_[1].to_high(d) * 2) * x + coeffs_[2].to_high(d);
}

Scalar Cubic::discriminant() const {
  const auto& [a, b, c, d] = coeffs_;
  return Scalar(18) * a * b * c * d - Scalar(4) * pow(b, 3) * d + pow(b, 2) * pow(c, 2) -
         Scalar(4) * a * pow(c, 3) - Scalar(27) * pow(a, 2) * pow(d, 2);
}

std::string Cubic::to_string(int decimals) const {
  static constexpr const char* kPowers[] = {"x^3", "x^2", "x", ""};
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = magnitude.is_exact() && magnitude.exact() == 1;
    if (i == 3) {
      out << magnitude.to_string(decimals);
    } else {
      if (!unit) {
        std::string text = magnitude.to_string(decimals);
        if (text.find('/') != std::string::npos) text = "(" + text + ")";
        out << text << "*";
      }
      out << kPowers[i];
    }
    first = false;
  }
  return first ? "0" : out.str();
}

bool approx_equal(const Cubic& a, const Cubic& b, const PrecisionPolicy& policy) {
  const int d = policy.working_digits();
  for (int i = 0; i < 4; ++i) {
    if (!policy.equal(a.coefficients()[i].to_high(d), b.coefficients()[i].to_high(d))) return false;
  }
  return true;
}

IntegerMatrix3 IntegerMatrix3::identity() {
  IntegerMatrix3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  return m;
}

mpz_class IntegerMatrix3::trace() const { return entries_[0][0] + entries_[1][1] + entries_[2][2]; }

mpz_class IntegerMatrix3::determinant() const {
  const auto& e = entries_;
  return mpz_class(e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                   e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                   e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]));
}

mpz_class IntegerMatrix3::adjugate_trace() const {
  const auto& e = entries_;
  return mpz_class((e[1][1] * e[2][2] - e[1][2] * e[2][1]) + (e[0][0] * e[2][2] - e[0][2] * e[2][0]) +
                   (e[0][0] * e[1][1] - e[0][1] * e[1][0]));
}

IntegerMatrix3 operator*(const IntegerMatrix3& a, const IntegerMatrix3& b) {
  IntegerMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      mpz_class sum = 0;
      for (int k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

IntegerMatrix3 power(const IntegerMatrix3& m, unsigned long exponent) {
  IntegerMatrix3 result = IntegerMatrix3::identity();
  IntegerMatrix3 base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Cubic build_rcp(const RcpParams& params) {
  const auto& [h, s] = params;
  if (s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  return Cubic(Scalar(1), h * s, -(h + Scalar(3)) * s * s, s * s * s);
}

bool is_rcp(const Scalar& p, const Scalar& q, const Scalar& r, const PrecisionPolicy& policy) {
  if (r.is_zero()) return false;
  const Scalar root = real_cbrt(r, policy.working_digits());
  const Scalar relation = p * root + Scalar(3) * root * root + q;
  if (relation.is_exact()) return relation.is_zero();
  return policy.negligible(relation.to_high(policy.working_digits()));
}

bool is_rcp(const Cubic& monic_cubic, const PrecisionPolicy& policy) {
  const Cubic c = monic_cubic.monic();
  return is_rcp(c.a2(), c.a1(), c.a0(), policy);
}

RcpParams rcp_params_from_coeffs(const Scalar& p, const Scalar& q, const Scalar& r,
                                 const PrecisionPolicy& policy) {
  if (r.is_zero()) {
    throw Error(ErrorCode::NotAnRcp, "constant coefficient is zero");
  }
  Scalar s = real_cbrt(r, policy.working_digits());
  Scalar h = p / s;
  const Scalar mismatch = q + (h + Scalar(3)) * s * s;
  const bool ok = mismatch.is_exact() ? mismatch.is_zero()
                                      : policy.negligible(mismatch.to_high(policy.working_digits()));
  if (!ok) {
    throw Error(ErrorCode::NotAnRcp, "q does not equal -(h+3)s^2 for h = p/cbrt(r), s = cbrt(r)");
  }
  return RcpParams{std::move(h), std::move(s)};
}

Cubic build_scp(const Scalar& h) { return Cubic(Scalar(1), -h, -(h + Scalar(3)), Scalar(-1)); }

Cubic build_rcp_witula(const Scalar& gamma, const Scalar& r, const PrecisionPolicy& policy) {
  if (gamma.is_exact() && (gamma.exact() == 1 || gamma.exact() == 2)) {
    throw Error(ErrorCode::DegenerateGamma, "gamma must avoid 1 and 2");
  }
  if (!gamma.is_exact()) {
    const HighReal g = gamma.to_high(policy.working_digits());
    if (policy.negligible(g - 1L) || policy.negligible(g - 2L)) {
      throw Error(ErrorCode::DegenerateGamma, "gamma must avoid 1 and 2");
    }
  }
  if (r.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "r must be nonzero");
  }
  const Scalar root = real_cbrt(r, policy.working_digits());
  const Scalar one(1);
  const Scalar two(2);
  const Scalar z1 = root / (two - gamma);
  const Scalar z2 = (gamma - one) * root;
  const Scalar z3 = (two - gamma) / (one - gamma) * root;
  return Cubic(one, -(z1 + z2 + z3), z1 * z2 + z1 * z3 + z2 * z3, -(z1 * z2 * z3));
}

Scalar tau(const Scalar& h) { return h * h + Scalar(3) * h + Scalar(9); }

IntegerMatrix3 companion_matrix(const mpz_class& h) {
  return IntegerMatrix3({IntegerMatrix3::Row{0, 1, 0}, IntegerMatrix3::Row{0, 0, 1},
                         IntegerMatrix3::Row{1, mpz_class(h + 3), h}});
}

}  // namespace cubicfields
