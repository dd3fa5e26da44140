#pragma once

#include <array>
#include <map>
#include <shared_mutex>
#include <vector>

#include <gmpxx.h>

#include "cubicfields/high_real.hpp"

namespace cubicfields {

/// a_{n+3} = c2 a_{n+2} - c1 a_{n+1} + c0 a_n, i.e. characteristic polynomial
/// x^3 - c2 x^2 + c1 x - c0.
struct RecurrenceSpec {
  mpz_class c2;
  mpz_class c1;
  mpz_class c0;
  std::array<mpz_class, 3> initial;
};

/// A(k, n) = Tr(M^(kn)) for the companion matrix of the SCP with parameter h.
mpz_class trace_power_sum(const mpz_class& h, unsigned long k, unsigned long n);

/// Characteristic polynomial of M^k: c2 = Tr(M^k), c1 = Tr(adj(M^k)), c0 = det(M^k) = 1,
/// seeded with A(k,0), A(k,1), A(k,2).
RecurrenceSpec char_poly_of_power(const mpz_class& h, unsigned long k);

/// The recurrence 5, -6, 1 from (3, 5, 13).
RecurrenceSpec a198636_spec();

mpz_class recurrence_eval(const RecurrenceSpec& spec, unsigned long n);
/// Terms 0..count-1.
std::vector<mpz_class> recurrence_terms(const RecurrenceSpec& spec, unsigned long count);

/// Adjacency matrix of the path P_N with a cache of its powers.
/// Safe for concurrent readers; inserts are serialized.
class WalkTable {
 public:
  explicit WalkTable(unsigned long vertex_count);

  unsigned long size() const noexcept { return n_; }
  /// Tr(J_N^l): closed walks of length l.
  mpz_class closed_walks(unsigned long length) const;

 private:
  using Matrix = std::vector<std::vector<mpz_class>>;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix power(unsigned long exponent) const;

  unsigned long n_;
  Matrix adjacency_;
  mutable std::shared_mutex mutex_;
  mutable std::map<unsigned long, Matrix> powers_;
};

/// w(N, l) = Tr(J_N^l).
mpz_class path_walks(unsigned long vertex_count, unsigned long length);

/// 2 cos(j pi / (N+1)), j = 1..N.
std::vector<HighReal> chebyshev_path_eigenvalues(unsigned long vertex_count, const PrecisionPolicy& policy);

struct JeffereyRow {
  unsigned long n;
  mpz_class recurrence;
  mpz_class trace;
  mpz_class walks_half;
  HighReal trig;
};

/// Rows 0..n_max comparing the recurrence, the matrix trace, half the closed
/// walks on P_6 and 4^n (cos^2n(pi/7) + cos^2n(2pi/7) + cos^2n(3pi/7)).
/// Throws PrecisionExhausted when a trig value is not within
/// 10^-(target_digits - 10) of an integer.
std::vector<JeffereyRow> jefferey_rows(unsigned long n_max, const PrecisionPolicy& policy);

/// True iff every row agrees exactly.
bool jefferey_check(unsigned long n_max, const PrecisionPolicy& policy);

}  // namespace cubicfields
