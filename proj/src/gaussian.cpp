#include "cubicfields/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exponent, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> factors;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

long mod3(long h) { return ((h % 3) + 3) % 3; }

Scalar abs_scalar(const Scalar& x) { return x.sign() < 0 ? -x : x; }

void require_lehmer_case(long h) {
  if (mod3(h) == 0) {
    throw Error(ErrorCode::NotLehmerCase, "h = " + std::to_string(h) + " is divisible by 3");
  }
}

u64 checked_tau(long h) {
  const long value = h * h + 3 * h + 9;
  return static_cast<u64>(value);
}

HighReal cubic_residual(const HighReal& x, u64 p) {
  // x^3 - p x + p
  const long pl = static_cast<long>(p);
  return (x * x - pl) * x + pl;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 smallest_primitive_root(u64 p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    const bool generator = std::all_of(factors.begin(), factors.end(),
                                       [&](u64 q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (generator) return g;
  }
  throw Error(ErrorCode::NotPrime, "no primitive root found");
}

CosetTriple cubic_cosets(u64 p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p % 3 != 1) {
    throw Error(ErrorCode::NoCubicCosets, std::to_string(p) + " is not 1 mod 3");
  }
  const u64 g = smallest_primitive_root(p);
  std::vector<bool> is_cube(p, false);
  for (u64 x = 1; x < p; ++x) is_cube[pow_mod(x, 3, p)] = true;

  CosetTriple out;
  for (u64 j = 1; j < p; ++j) {
    if (is_cube[j]) out[0].push_back(j);
  }
  const u64 g2 = mul_mod(g, g, p);
  for (u64 c : out[0]) {
    out[1].push_back(mul_mod(g, c, p));
    out[2].push_back(mul_mod(g2, c, p));
  }
  std::sort(out[1].begin(), out[1].end());
  std::sort(out[2].begin(), out[2].end());
  return out;
}

PeriodSet gaussian_periods(u64 p, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  PeriodSet set{p, 0, cubic_cosets(p), {HighReal(w), HighReal(w), HighReal(w)}, std::nullopt, std::nullopt};
  set.g = smallest_primitive_root(p);

  const HighReal two_pi_over_p = HighReal::pi(w) * 2 / HighReal(static_cast<long>(p), w);
  for (std::size_t k = 0; k < 3; ++k) {
    HighReal sum(w);
    // Each coset is closed under j -> p - j, so pair the conjugate terms.
    for (u64 j : set.cosets[k]) {
      if (2 * j < p) sum += cos(two_pi_over_p * static_cast<long>(j));
    }
    set.values[k] = sum * 2;
  }
  set.h = shanks_parameter(p);
  if (set.h) set.L = lehmer_L(*set.h);
  return set;
}

std::optional<long> shanks_parameter(u64 p) {
  // h^2 + 3h + 9 = p  =>  h = (-3 + sqrt(4p - 27)) / 2.
  if (p < 7) return std::nullopt;
  const mpz_class disc = mpz_class(4) * mpz_class(static_cast<unsigned long>(p)) - 27;
  if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return std::nullopt;
  const mpz_class root = sqrt(disc);
  const mpz_class twice_h = root - 3;
  if (twice_h % 2 != 0) return std::nullopt;
  const long h = mpz_class(twice_h / 2).get_si();
  if (mod3(h) == 0 || !is_prime(p)) return std::nullopt;
  return h;
}

std::vector<ShanksPrime> shanks_primes(u64 limit) {
  std::vector<ShanksPrime> out;
  for (long h = -1;; ++h) {
    const u64 p = checked_tau(h);
    if (p > limit) break;
    if (mod3(h) != 0 && is_prime(p)) out.push_back({h, p});
  }
  return out;
}

long lehmer_L(long h) {
  require_lehmer_case(h);
  return mod3(h) == 1 ? -(2 * h + 3) : 2 * h + 3;
}

Cubic period_minimal_poly(long h) {
  require_lehmer_case(h);
  const u64 p = checked_tau(h);
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotShanksPrime, "tau(" + std::to_string(h) + ") = " + std::to_string(p) + " is composite");
  }
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class constant_num = mpz_class(lehmer_L(h) + 3) * pz - 1;
  // Both quotients are exact for Shanks primes; Scalar keeps them rational regardless.
  return Cubic(Scalar(1), Scalar(1), -Scalar(mpq_class(pz - 1, 3)), -Scalar(mpq_class(constant_num, 27)));
}

Scalar printed_g2_constant(long h) {
  const mpz_class pz(static_cast<unsigned long>(checked_tau(h)));
  return -Scalar(mpq_class(mpz_class((6 + 2 * h) * pz + 1), 27));
}

ZeroTriple scp_zeros_via_periods(long h, const PrecisionPolicy& policy) {
  (void)period_minimal_poly(h);  // validates h
  const int w = policy.working_digits();
  const PeriodSet periods = gaussian_periods(checked_tau(h), policy);
  std::array<HighReal, 3> zeros{HighReal(w), HighReal(w), HighReal(w)};
  if (mod3(h) == 1) {
    const HighReal shift(mpq_class(h - 1, 3), w);
    for (std::size_t k = 0; k < 3; ++k) zeros[k] = shift - periods.values[k];
  } else {
    const HighReal shift(mpq_class(h + 1, 3), w);
    for (std::size_t k = 0; k < 3; ++k) zeros[k] = shift + periods.values[k];
  }
  return make_zero_triple(zeros);
}

ZeroTriple lrcp_zeros_via_periods(long h, const Scalar& s, const PrecisionPolicy& policy) {
  if (s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  (void)period_minimal_poly(h);
  const int w = policy.working_digits();
  const PeriodSet periods = gaussian_periods(checked_tau(h), policy);
  const HighReal sr = s.to_high(w);
  const HighReal hr(h, w);
  std::array<HighReal, 3> zeros{HighReal(w), HighReal(w), HighReal(w)};
  for (std::size_t k = 0; k < 3; ++k) {
    const HighReal& eta_k = periods.values[k];
    // gamma_1 = -(1/3) s (h - 1 - 3 eta), gamma_2 = -(1/3) s (h + 1 + 3 eta)
    zeros[k] = mod3(h) == 1 ? -(sr * (hr - 1L - eta_k * 3)) / 3 : -(sr * (hr + 1L + eta_k * 3)) / 3;
  }
  return make_zero_triple(zeros);
}

Scalar verify_idscrp(long h, const Scalar& s, const Scalar& x, const PrecisionPolicy& policy) {
  if (s.is_zero()) {
    throw Error(ErrorCode::InvalidScale, "s must be nonzero");
  }
  const Cubic g = period_minimal_poly(h);
  const Scalar hs(h);
  const Scalar lhs = build_rcp({hs, s}).evaluate(x);
  const Scalar s3 = s * s * s;
  Scalar rhs;
  if (mod3(h) == 1) {
    const Scalar theta = x / s + (hs - Scalar(1)) / Scalar(3);
    rhs = s3 * g.evaluate(theta);
  } else {
    const Scalar theta = -(x / s) - (hs + Scalar(1)) / Scalar(3);
    rhs = -(s3 * g.evaluate(theta));
  }
  Scalar residual = abs_scalar(lhs - rhs);
  if (!residual.is_exact()) {
    residual = Scalar(residual.to_high(policy.working_digits()));
  }
  return residual;
}

DeltaSet period_differences(u64 p, const PrecisionPolicy& policy) {
  const auto h = shanks_parameter(p);
  if (!h) {
    throw Error(ErrorCode::NotShanksPrime, std::to_string(p) + " is not a Shanks prime");
  }
  const int w = policy.working_digits();
  const PeriodSet periods = gaussian_periods(p, policy);
  const auto& e = periods.values;

  DeltaSet out{p, *h, {e[0] - e[1], e[1] - e[2], e[2] - e[0]}, 1,
               {HighReal(w), HighReal(w), HighReal(w)}, 1};
  const auto all_roots = [&](const std::array<HighReal, 3>& values) {
    return std::all_of(values.begin(), values.end(),
                       [&](const HighReal& d) { return policy.negligible(cubic_residual(d, p)); });
  };
  if (!all_roots(out.deltas)) {
    // Reversing the coset labels negates every difference.
    out.deltas = {e[0] - e[2], e[2] - e[1], e[1] - e[0]};
    out.orientation = -1;
  }

  // 1/theta_h = (3 + 2h) / (3 sqrt 3)
  const HighReal inverse_theta = HighReal(3 + 2 * *h, w) / (sqrt(HighReal(27, w)));
  const HighReal phi = branch_arctan(inverse_theta, HighReal(1L, w));
  const HighReal amplitude = sqrt(HighReal(static_cast<long>(p), w) / 3) * 2;
  const HighReal pi = HighReal::pi(w);
  std::array<HighReal, 3> plus{HighReal(w), HighReal(w), HighReal(w)};
  for (int i = 0; i < 3; ++i) plus[i] = amplitude * cos((phi + pi * static_cast<long>(2 * i)) / 3);
  if (all_roots(plus)) {
    out.closed_form = plus;
    out.closed_form_sign = 1;
  } else {
    for (int i = 0; i < 3; ++i) out.closed_form[i] = -plus[i];
    out.closed_form_sign = -1;
  }
  return out;
}

}  // namespace cubicfields
