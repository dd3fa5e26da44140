#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the code paths it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubicfields/high_real.hpp"

namespace testing {

using cubicfields::HighReal;

inline HighReal hr(const char* text, int digits) { return HighReal::parse(text, digits); }

inline bool within(const HighReal& a, const HighReal& b, long exponent) {
  return cubicfields::abs(a - b) < HighReal::pow10(-exponent, std::max(a.digits(), b.digits()));
}

// 2 cos(2 pi m / n)
inline HighReal two_cos(long m, long n, int digits) {
  return cubicfields::cos(HighReal::pi(digits) * (2 * m) / n) * 2;
}

inline std::array<HighReal, 3> sorted_desc(std::array<HighReal, 3> v) {
  std::sort(v.begin(), v.end(), [](const HighReal& a, const HighReal& b) { return a > b; });
  return v;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1;
  unsigned __int128 x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Periods by the cubic residue character: j is in the class of c when
// (j / c)^((p-1)/3) == 1, i.e. j^((p-1)/3) == c^((p-1)/3). Classes are
// returned in the order of their smallest member's character value, so only
// the multiset is meaningful.
inline std::vector<HighReal> periods_by_character(std::uint64_t p, int digits) {
  const std::uint64_t e = (p - 1) / 3;
  std::vector<std::uint64_t> keys;
  std::vector<HighReal> sums;
  for (std::uint64_t j = 1; j < p; ++j) {
    const std::uint64_t key = pow_mod(j, e, p);
    auto it = std::find(keys.begin(), keys.end(), key);
    std::size_t idx = static_cast<std::size_t>(it - keys.begin());
    if (it == keys.end()) {
      keys.push_back(key);
      sums.emplace_back(digits);
    }
    sums[idx] += cubicfields::cos(HighReal::pi(digits) * static_cast<long>(2 * j) / static_cast<long>(p));
  }
  return sums;
}

// Plain cubic-time matrix product for the trace oracle.
using Mat = std::array<std::array<mpz_class, 3>, 3>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

// Tr(M^m) by repeated multiplication, M the companion matrix of x^3 - h x^2 - (h+3) x - 1.
inline mpz_class naive_trace(long h, unsigned long m) {
  const Mat M{{{0, 1, 0}, {0, 0, 1}, {1, 3 + h, h}}};
  Mat P{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (unsigned long i = 0; i < m; ++i) P = mat_mul(P, M);
  return P[0][0] + P[1][1] + P[2][2];
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace testing
