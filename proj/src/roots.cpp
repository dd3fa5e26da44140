#include "cubicfields/roots.hpp"

#include <algorithm>
#include <numeric>

#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

constexpr std::array<int, 3> kBranches{0, 2, 4};

// cos((theta + k*pi)/3) for k = 0, 2, 4.
std::array<HighReal, 3> cosine_terms(const HighReal& theta) {
  const HighReal pi = HighReal::pi(theta.digits());
  std::array<HighReal, 3> out{HighReal(theta.digits()), HighReal(theta.digits()), HighReal(theta.digits())};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = cos((theta + pi * static_cast<long>(kBranches[i])) / 3);
  }
  return out;
}

std::array<int, 3> orbit_order_for(const std::array<HighReal, 3>& zeros, const HighReal& s) {
  auto nearest = [&](const HighReal& value, int exclude) {
    int best = -1;
    HighReal best_distance(value.digits());
    for (int j = 0; j < 3; ++j) {
      if (j == exclude) continue;
      HighReal distance = abs(zeros[j] - value);
      if (best < 0 || distance < best_distance) {
        best = j;
        best_distance = std::move(distance);
      }
    }
    return best;
  };
  const int second = nearest(eta(s, zeros[0]), 0);
  return {0, second, 3 - second};
}

}  // namespace

ZeroTriple make_zero_triple(std::array<HighReal, 3> zeros, std::array<int, 3> branch) {
  std::array<std::size_t, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return zeros[a] > zeros[b]; });
  ZeroTriple out{{zeros[idx[0]], zeros[idx[1]], zeros[idx[2]]}, {branch[idx[0]], branch[idx[1]], branch[idx[2]]}, {}};
  return out;
}

bool same_zeros(const ZeroTriple& a, const ZeroTriple& b, const PrecisionPolicy& policy) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!policy.equal(a[i], b[i])) return false;
  }
  return true;
}

HighReal max_residual(const Cubic& c, const ZeroTriple& zt) {
  HighReal worst(zt.digits());
  for (const auto& z : zt.zeros) {
    HighReal r = abs(c.evaluate(z));
    if (r > worst) worst = std::move(r);
  }
  return worst;
}

ResolventData resolvent(const Cubic& c, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  const HighReal a = c.a3().to_high(w);
  const HighReal b = c.a2().to_high(w);
  const HighReal cc = c.a1().to_high(w);
  const HighReal d = c.a0().to_high(w);

  HighReal e = (cc - b * b / (a * 3)) / a;
  HighReal f = (d + b * b * b * 2 / (a * a * 27) - b * cc / (a * 3)) / a;
  // w^2 + f w - e^3/27 has non-real zeros iff f^2 + 4e^3/27 < 0.
  const HighReal disc = f * f + e * e * e * 4 / 27;
  if (disc.sign() >= 0) {
    throw Error(ErrorCode::NotThreeRealRoots, "resolvent has real zeros; the cubic does not have three distinct real zeros");
  }
  HighReal alpha = -f / 2;
  HighReal beta = sqrt(-disc) / 2;
  HighReal rho = sqrt(alpha * alpha + beta * beta);
  HighReal theta = branch_arctan(beta, alpha);
  HighReal shift = -b / (a * 3);
  return ResolventData{std::move(e), std::move(f),     std::move(alpha), std::move(beta),
                       std::move(rho), std::move(theta), std::move(shift)};
}

ZeroTriple solve_cubic_trig(const Cubic& c, const PrecisionPolicy& policy) {
  const ResolventData r = resolvent(c, policy);
  // The sign follows sign(alpha); alpha == 0 takes the + form with theta = pi/2.
  const HighReal amplitude = real_cbrt(r.rho) * (r.alpha.sign() < 0 ? -2L : 2L);
  const auto terms = cosine_terms(r.theta);
  return make_zero_triple({r.shift + amplitude * terms[0], r.shift + amplitude * terms[1],
                           r.shift + amplitude * terms[2]},
                          kBranches);
}

ZeroTriple scp_zeros(const Scalar& h, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  const HighReal hr = h.to_high(w);
  const HighReal tau_h = tau(h).to_high(w);
  const Scalar denominator = Scalar(3) + Scalar(2) * h;
  const HighReal den = denominator.to_high(w);
  const HighReal theta = branch_arctan(sqrt(HighReal(27, w)), den);
  // + form for h >= -3/2, - form for h <= -3/2; at h = -3/2 both coincide.
  const HighReal amplitude = sqrt(tau_h) * (denominator.sign() < 0 ? -2L : 2L);
  const auto terms = cosine_terms(theta);
  ZeroTriple out = make_zero_triple({(hr + amplitude * terms[0]) / 3, (hr + amplitude * terms[1]) / 3,
                                     (hr + amplitude * terms[2]) / 3},
                                    kBranches);
  out.orbit_order = orbit_order_for(out.zeros, HighReal(-1L, w));
  return out;
}

ZeroTriple rcp_zeros(const RcpParams& params, const PrecisionPolicy& policy) {
  if (params.s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  const int w = policy.working_digits();
  const ZeroTriple base = scp_zeros(params.h, policy);
  const HighReal minus_s = -params.s.to_high(w);
  ZeroTriple out = make_zero_triple({minus_s * base[0], minus_s * base[1], minus_s * base[2]}, base.branch);
  out.orbit_order = orbit_order_for(out.zeros, params.s.to_high(w));
  return out;
}

Scalar eta(const Scalar& s, const Scalar& z) {
  const Scalar gap = s - z;
  if (gap.is_zero()) {
    throw Error(ErrorCode::PoleOfTransform, "eta_s(z) has a pole at z = s");
  }
  return s * s / gap;
}

HighReal eta(const HighReal& s, const HighReal& z) {
  const HighReal gap = s - z;
  if (gap.is_zero()) {
    throw Error(ErrorCode::PoleOfTransform, "eta_s(z) has a pole at z = s");
  }
  return s * s / gap;
}

ZeroTriple orbit(const Scalar& s, const Scalar& alpha, const PrecisionPolicy& policy) {
  if (alpha.is_zero() || (alpha - s).is_zero()) {
    throw Error(ErrorCode::PoleOfTransform, "orbit seed must avoid 0 and s");
  }
  const int w = policy.working_digits();
  const Scalar first = eta(s, alpha);
  const Scalar second = -(s * (s - alpha)) / alpha;
  const std::array<HighReal, 3> raw{alpha.to_high(w), first.to_high(w), second.to_high(w)};
  // Labels 0,1,2 record the position in the orbit; recover the order after sorting.
  ZeroTriple out = make_zero_triple(raw, {0, 1, 2});
  std::array<int, 3> order{};
  for (int i = 0; i < 3; ++i) order[out.branch[i]] = i;
  out.orbit_order = order;
  out.branch = {-1, -1, -1};
  return out;
}

RcpThrough rcp_through(const Scalar& alpha, const Scalar& s) {
  if (s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  if (alpha.is_zero() || (alpha - s).is_zero()) {
    throw Error(ErrorCode::PoleOfTransform, "alpha must avoid 0 and s");
  }
  Scalar h = (s * s * s - Scalar(3) * s * s * alpha + alpha * alpha * alpha) / (s * (s - alpha) * alpha);
  Cubic cubic = build_rcp({h, s});
  return RcpThrough{std::move(h), std::move(cubic)};
}

std::size_t match_zero(const ZeroTriple& zt, const HighReal& target, const PrecisionPolicy& policy) {
  std::array<HighReal, 3> distance{abs(zt[0] - target), abs(zt[1] - target), abs(zt[2] - target)};
  std::array<std::size_t, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return distance[a] < distance[b]; });
  if (policy.negligible(distance[idx[1]] - distance[idx[0]])) {
    throw Error(ErrorCode::AmbiguousMatch, "two zeros are equidistant from the target");
  }
  return idx[0];
}

ZeroTriple oracle_roots(const Cubic& c, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  const Scalar disc = c.discriminant();
  if (disc.sign() <= 0) {
    throw Error(ErrorCode::NotThreeRealRoots, "discriminant is not positive");
  }
  const Cubic m = c.monic();
  const HighReal b = m.a2().to_high(w);
  const HighReal cc = m.a1().to_high(w);
  const HighReal d = m.a0().to_high(w);

  // Critical points of x^3 + b x^2 + c x + d split the line into monotone pieces.
  const HighReal root_term = sqrt(b * b - cc * 3);
  const HighReal lo_crit = (-b - root_term) / 3;
  const HighReal hi_crit = (-b + root_term) / 3;
  const HighReal bound = std::max({abs(b), abs(cc), abs(d)}, [](const HighReal& x, const HighReal& y) {
                           return x < y;
                         }) + 1L;

  const HighReal eps = HighReal::pow10(-w, w);
  auto refine = [&](const HighReal& left, const HighReal& right) {
    HighReal lo = left;
    HighReal hi = right;
    HighReal f_lo = m.evaluate(lo);
    if (f_lo.is_zero()) return lo;
    // Bisection down to roughly double precision.
    for (int i = 0; i < 200; ++i) {
      HighReal mid = (lo + hi) / 2;
      if (abs(hi - lo) <= (abs(mid) + 1L) * HighReal::pow10(-18, w)) break;
      HighReal f_mid = m.evaluate(mid);
      if (f_mid.is_zero()) return mid;
      if ((f_mid.sign() > 0) == (f_lo.sign() > 0)) {
        lo = std::move(mid);
        f_lo = std::move(f_mid);
      } else {
        hi = std::move(mid);
      }
    }
    // Newton polish. A near-zero f(mid) can have the wrong sign and leave the
    // root just outside the bisection bracket, so clamp to the monotone piece.
    HighReal x = (lo + hi) / 2;
    for (int i = 0; i < 64; ++i) {
      const HighReal fx = m.evaluate(x);
      const HighReal dfx = m.derivative(x);
      if (fx.is_zero() || dfx.is_zero()) break;
      HighReal next = x - fx / dfx;
      if (next < left || next > right) next = (x + (next < left ? left : right)) / 2;
      const bool done = abs(next - x) <= abs(x) * eps + eps;
      x = std::move(next);
      if (done) break;
    }
    return x;
  };

  ZeroTriple out = make_zero_triple({refine(-bound, lo_crit), refine(lo_crit, hi_crit), refine(hi_crit, bound)});
  return out;
}

}  // namespace cubicfields
