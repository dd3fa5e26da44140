#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubicfields/expression.hpp"
#include "cubicfields/high_real.hpp"
#include "cubicfields/scalar.hpp"

namespace cubicfields {

struct IdentityReport {
  std::string name;
  HighReal lhs;
  HighReal rhs;
  HighReal residual;  // |lhs - rhs|
  int digits = 0;
  bool pass = false;  // residual < 10^-digits
};

/// sum of cbrt(x_i) over the zeros of rho(h,s,x) against
/// cbrt(-p - 6 cbrt(r) + 3 cbrt(9r - pq)), real branch throughout.
IdentityReport ramanujan_cbrt_sum_check(const Scalar& h, const Scalar& s, int digits);

/// cbrt(alpha) = -cbrt(s^2/(s-alpha)) - cbrt(-s(s-alpha)/alpha) + cbrt(big bracket).
IdentityReport extended_identity_check(const Scalar& alpha, const Scalar& s, int digits);

/// Shifted cubic Gaussian periods of p = tau(h):
/// sum cbrt((h-1)/3 - eta_k) for h = 1 (mod 3), sum cbrt((h+1)/3 + eta_k) for h = 2,
/// both against cbrt(6 + h - 3 cbrt(p)).
IdentityReport gauss_period_cbrt_identity(long h, int digits);

struct NamedIdentity {
  std::string_view name;
  std::string_view lhs;
  std::string_view rhs;
};

/// Catalog entries, stored as expression text.
const std::vector<NamedIdentity>& identity_catalog();

/// Throws UnknownIdentity for names outside the catalog.
IdentityReport verify_named(std::string_view name, int digits);

IdentityReport verify_expression(const Expression& lhs, const Expression& rhs, int digits,
                                 std::string name = "expression");

}  // namespace cubicfields
