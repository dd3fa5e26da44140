#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubicfields/cubic.hpp"
#include "cubicfields/high_real.hpp"
#include "cubicfields/roots.hpp"

namespace cubicfields {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Smallest generator of (Z/pZ)*. Requires p prime.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Cubic residues C0 and their cosets C1 = g*C0, C2 = g^2*C0, each sorted.
using CosetTriple = std::array<std::vector<std::uint64_t>, 3>;

struct PeriodSet {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  CosetTriple cosets;
  std::array<HighReal, 3> values;
  /// Shanks parameter (h >= -1, tau(h) = p) when p is a Shanks prime.
  std::optional<long> h;
  /// -(2h+3) for h = 1 mod 3, 2h+3 for h = 2 mod 3.
  std::optional<long> L;
};

/// Throws NotPrime / NoCubicCosets.
CosetTriple cubic_cosets(std::uint64_t p);

/// Periods as paired cosine sums over each coset.
PeriodSet gaussian_periods(std::uint64_t p, const PrecisionPolicy& policy);

struct ShanksPrime {
  long h;
  std::uint64_t p;
};

/// Every (h, tau(h)) with h >= -1, 3 does not divide h and tau(h) <= limit prime,
/// ascending in p.
std::vector<ShanksPrime> shanks_primes(std::uint64_t limit);

/// h >= -1 with tau(h) == p and 3 not dividing h, if any.
std::optional<long> shanks_parameter(std::uint64_t p);

/// +-(2h+3), the sign fixed by h mod 3. Throws NotLehmerCase when 3 | h.
long lehmer_L(long h);

/// x^3 + x^2 - ((p-1)/3) x - ((L+3)p - 1)/27 with exact integer coefficients.
/// Throws NotLehmerCase (3 | h) or NotShanksPrime (tau(h) composite).
Cubic period_minimal_poly(long h);

/// The constant term as printed for the h = 2 (mod 3) case, -((6+2h)p+1)/27.
/// Kept only to document that it disagrees with period_minimal_poly.
Scalar printed_g2_constant(long h);

/// SCP zeros as shifted periods: (h-1)/3 - eta_k for h = 1, (h+1)/3 + eta_k for h = 2 (mod 3).
ZeroTriple scp_zeros_via_periods(long h, const PrecisionPolicy& policy);

/// LRCP zeros gamma_1 / gamma_2 applied to the periods of tau(h).
ZeroTriple lrcp_zeros_via_periods(long h, const Scalar& s, const PrecisionPolicy& policy);

/// |rho(h,s,x) - (+-s^3 G(h, theta(h,s,x)))|, with G taken from period_minimal_poly.
Scalar verify_idscrp(long h, const Scalar& s, const Scalar& x, const PrecisionPolicy& policy);

struct DeltaSet {
  std::uint64_t p = 0;
  long h = 0;
  /// Oriented differences, roots of x^3 - p x + p.
  std::array<HighReal, 3> deltas;
  /// +1 when (eta0-eta1, eta1-eta2, eta2-eta0) already has that property,
  /// -1 when the coset labels had to be reversed.
  int orientation = 1;
  /// 2 sqrt(p/3) cos((arctan(1/theta_h) + k pi)/3), k = 0, 2, 4, times closed_form_sign.
  std::array<HighReal, 3> closed_form;
  int closed_form_sign = 1;
};

/// Throws NotShanksPrime when p is not tau(h) for an admissible h.
DeltaSet period_differences(std::uint64_t p, const PrecisionPolicy& policy);

}  // namespace cubicfields
