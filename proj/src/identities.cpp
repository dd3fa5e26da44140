#include "cubicfields/identities.hpp"

#include <algorithm>

#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"
#include "cubicfields/gaussian.hpp"
#include "cubicfields/roots.hpp"

namespace cubicfields {

namespace {

IdentityReport make_report(std::string name, HighReal lhs, HighReal rhs, int digits) {
  HighReal residual = abs(lhs - rhs);
  const bool pass = residual < HighReal::pow10(-digits, residual.digits());
  return IdentityReport{std::move(name), std::move(lhs), std::move(rhs), std::move(residual), digits, pass};
}

HighReal cbrt_high(const Scalar& x, int w) { return real_cbrt(x.to_high(w)); }

}  // namespace

IdentityReport ramanujan_cbrt_sum_check(const Scalar& h, const Scalar& s, int digits) {
  const PrecisionPolicy policy(digits);
  const int w = policy.working_digits();
  const ZeroTriple zeros = rcp_zeros({h, s}, policy);

  HighReal lhs(w);
  for (const auto& z : zeros.zeros) lhs += real_cbrt(z);

  const Scalar p = h * s;
  const Scalar q = -(h + Scalar(3)) * s * s;
  const Scalar r = s * s * s;
  const HighReal inner = -p.to_high(w) - cbrt_high(r, w) * 6 + cbrt_high(Scalar(9) * r - p * q, w) * 3;
  return make_report("ramanujan", std::move(lhs), real_cbrt(inner), digits);
}

IdentityReport extended_identity_check(const Scalar& alpha, const Scalar& s, int digits) {
  if (s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  if (alpha.is_zero() || (alpha - s).is_zero()) {
    throw Error(ErrorCode::PoleOfTransform, "alpha must avoid 0 and s");
  }
  const int w = PrecisionPolicy(digits).working_digits();
  const Scalar a = alpha;
  const Scalar gap = s - a;

  const HighReal first = -cbrt_high(s * s / gap, w);
  const HighReal second = -cbrt_high(-(s * gap) / a, w);
  const Scalar quotient = (s * s * s + Scalar(3) * s * s * a - Scalar(6) * s * a * a + a * a * a) / (a * a - s * a);
  const HighReal bracket = quotient.to_high(w) + (Scalar(3) * (s * s - s * a + a * a)).to_high(w) *
                                                     cbrt_high(s / (a * a * gap * gap), w);
  return make_report("extended", cbrt_high(a, w), first + second + real_cbrt(bracket), digits);
}

IdentityReport gauss_period_cbrt_identity(long h, int digits) {
  (void)period_minimal_poly(h);
  const PrecisionPolicy policy(digits);
  const int w = policy.working_digits();
  const long p = h * h + 3 * h + 9;
  const PeriodSet periods = gaussian_periods(static_cast<std::uint64_t>(p), policy);
  const bool first_case = ((h % 3) + 3) % 3 == 1;

  HighReal lhs(w);
  for (const auto& eta_k : periods.values) {
    lhs += first_case ? real_cbrt(HighReal(mpq_class(h - 1, 3), w) - eta_k)
                      : real_cbrt(HighReal(mpq_class(h + 1, 3), w) + eta_k);
  }
  const HighReal rhs = real_cbrt(HighReal(6 + h, w) - real_cbrt(HighReal(p, w)) * 3);
  return make_report(first_case ? "gaussrama" : "gaussrama2", std::move(lhs), rhs, digits);
}

const std::vector<NamedIdentity>& identity_catalog() {
  static const std::vector<NamedIdentity> catalog{
      {"cos2pi7", "2*cos(2*pi/7)", "(1/3)*(-1 + 2*sqrt(7)*cos((1/3)*arctan(3*sqrt(3))))"},
      {"sqrt2", "1", "sqrt(7)*cos((1/3)*arctan(9*sqrt(3)/10)) - sqrt(21)*sin((1/3)*arctan(9*sqrt(3)/10))"},
      {"sqrt2_zero", "sqrt(2)", "-(1 + 14*sqrt(7)*cos((1/3)*(arctan(9*sqrt(3)/10) + 4*pi)))/(3*sqrt(2))"},
      {"pi_zero",
       "(1 - 3*pi + pi^3 + 2*sqrt(1 - pi + pi^2)^3*cos((1/3)*arctan(3*sqrt(3)*(-1 + pi)*pi/(2 - 3*pi - 3*pi^2 + "
       "2*pi^3))))/(3*(-1 + pi)*pi)",
       "pi"},
      {"pi_cos", "(2*pi - 1)/(2*sqrt(pi^2 - pi + 1))",
       "cos((1/3)*arctan(3*sqrt(3)*(-1 + pi)*pi/(2 - 3*pi - 3*pi^2 + 2*pi^3)))"},
      {"pi_cbrt", "pi",
       "1/cbrt(-1 + pi^3) - cbrt(-1 + pi^3)/pi + cbrt(3*(1 - pi^3 + pi^6)/(pi^2*cbrt(-1 + pi^3)^2) + (1 + 3*pi^3 - "
       "6*pi^6 + pi^9)/(-pi^3 + pi^6))"},
  };
  return catalog;
}

IdentityReport verify_named(std::string_view name, int digits) {
  const auto& catalog = identity_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const NamedIdentity& e) { return e.name == name; });
  if (it == catalog.end()) {
    throw Error(ErrorCode::UnknownIdentity, "no catalog entry named '" + std::string(name) + "'");
  }
  return verify_expression(parse_expression(it->lhs), parse_expression(it->rhs), digits, std::string(name));
}

IdentityReport verify_expression(const Expression& lhs, const Expression& rhs, int digits, std::string name) {
  const int w = PrecisionPolicy(digits).working_digits();
  return make_report(std::move(name), evaluate(lhs, w), evaluate(rhs, w), digits);
}

}  // namespace cubicfields
