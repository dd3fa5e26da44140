#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "cubicfields/cubic.hpp"
#include "cubicfields/high_real.hpp"
#include "cubicfields/scalar.hpp"

namespace cubicfields {

/// Three real zeros in descending order.
///
/// `branch[i]` is the k in {0, 2, 4} of the cos((theta + k*pi)/3) term that
/// produced zeros[i], or -1 when the zero did not come from a closed form.
/// `orbit_order`, when present, lists indices so that
/// zeros[o[0]] -> zeros[o[1]] -> zeros[o[2]] follows eta_s.
struct ZeroTriple {
  std::array<HighReal, 3> zeros;
  std::array<int, 3> branch{-1, -1, -1};
  std::optional<std::array<int, 3>> orbit_order;

  const HighReal& operator[](std::size_t i) const { return zeros[i]; }
  int digits() const { return zeros[0].digits(); }
};

/// Sorts descending, carrying branch labels along.
ZeroTriple make_zero_triple(std::array<HighReal, 3> zeros, std::array<int, 3> branch = {-1, -1, -1});

/// Elementwise agreement of two descending triples within the policy tolerance.
bool same_zeros(const ZeroTriple& a, const ZeroTriple& b, const PrecisionPolicy& policy);

/// Largest |c(zero)| over the triple.
HighReal max_residual(const Cubic& c, const ZeroTriple& zt);

/// Data of the quadratic resolvent w^2 + f w - e^3/27 reached by the Vieta
/// substitution x = -b/3a + z + mu/z, z^3 = w.
struct ResolventData {
  HighReal e;
  HighReal f;
  HighReal alpha;  // real part of the resolvent zeros
  HighReal beta;   // imaginary part, > 0
  HighReal rho;    // sqrt(alpha^2 + beta^2)
  HighReal theta;  // branch_arctan(beta, alpha)
  HighReal shift;  // -b/3a
};

/// Throws NotThreeRealRoots when the resolvent has real zeros.
ResolventData resolvent(const Cubic& c, const PrecisionPolicy& policy);

/// Trigonometric zeros of a general cubic with three distinct real zeros.
ZeroTriple solve_cubic_trig(const Cubic& c, const PrecisionPolicy& policy);

/// Closed-form zeros of x^3 - h x^2 - (h+3) x - 1.
ZeroTriple scp_zeros(const Scalar& h, const PrecisionPolicy& policy);

/// Zeros of rho(h, s, x) as -s times the SCP zeros, with the eta_s orbit order.
ZeroTriple rcp_zeros(const RcpParams& params, const PrecisionPolicy& policy);

/// eta_s(z) = s^2 / (s - z). Throws PoleOfTransform at z == s.
Scalar eta(const Scalar& s, const Scalar& z);
HighReal eta(const HighReal& s, const HighReal& z);

/// {alpha, eta_s(alpha), eta_s^2(alpha)}. Throws PoleOfTransform for alpha in {0, s}.
ZeroTriple orbit(const Scalar& s, const Scalar& alpha, const PrecisionPolicy& policy);

struct RcpThrough {
  Scalar h;
  Cubic cubic;
};

/// The RCP with scale s having alpha as a zero:
/// h = (s^3 - 3 s^2 alpha + alpha^3) / (s (s - alpha) alpha).
RcpThrough rcp_through(const Scalar& alpha, const Scalar& s);

/// Index of the zero nearest `target`. Throws AmbiguousMatch on a tie.
std::size_t match_zero(const ZeroTriple& zt, const HighReal& target, const PrecisionPolicy& policy);

/// Independent root finder: bisection on the monotone pieces between the
/// critical points, then Newton polishing. Throws NotThreeRealRoots.
ZeroTriple oracle_roots(const Cubic& c, const PrecisionPolicy& policy);

}  // namespace cubicfields
