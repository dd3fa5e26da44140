#include "cubicfields/sequences.hpp"

#include <mutex>
#include <string>

#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"

namespace cubicfields {

namespace {

constexpr int kRoundingMargin = 10;

}  // namespace

mpz_class trace_power_sum(const mpz_class& h, unsigned long k, unsigned long n) {
  return power(companion_matrix(h), k * n).trace();
}

RecurrenceSpec char_poly_of_power(const mpz_class& h, unsigned long k) {
  const IntegerMatrix3 mk = power(companion_matrix(h), k);
  return RecurrenceSpec{mk.trace(), mk.adjugate_trace(), mk.determinant(),
                        {trace_power_sum(h, k, 0), trace_power_sum(h, k, 1), trace_power_sum(h, k, 2)}};
}

RecurrenceSpec a198636_spec() { return RecurrenceSpec{5, 6, 1, {3, 5, 13}}; }

mpz_class recurrence_eval(const RecurrenceSpec& spec, unsigned long n) {
  if (n < 3) return spec.initial[n];
  mpz_class a = spec.initial[0];
  mpz_class b = spec.initial[1];
  mpz_class c = spec.initial[2];
  for (unsigned long i = 3; i <= n; ++i) {
    mpz_class next = spec.c2 * c - spec.c1 * b + spec.c0 * a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

std::vector<mpz_class> recurrence_terms(const RecurrenceSpec& spec, unsigned long count) {
  std::vector<mpz_class> out;
  out.reserve(count);
  for (unsigned long i = 0; i < count; ++i) {
    if (i < 3) {
      out.push_back(spec.initial[i]);
    } else {
      out.push_back(spec.c2 * out[i - 1] - spec.c1 * out[i - 2] + spec.c0 * out[i - 3]);
    }
  }
  return out;
}

WalkTable::WalkTable(unsigned long vertex_count)
    : n_(vertex_count), adjacency_(vertex_count, std::vector<mpz_class>(vertex_count, 0)) {
  for (unsigned long i = 0; i + 1 < n_; ++i) {
    adjacency_[i][i + 1] = 1;
    adjacency_[i + 1][i] = 1;
  }
}

WalkTable::Matrix WalkTable::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(n_, std::vector<mpz_class>(n_, 0));
  for (unsigned long i = 0; i < n_; ++i) {
    for (unsigned long k = 0; k < n_; ++k) {
      if (a[i][k] == 0) continue;
      for (unsigned long j = 0; j < n_; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

WalkTable::Matrix WalkTable::power(unsigned long exponent) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = powers_.find(exponent); it != powers_.end()) return it->second;
  }
  Matrix result(n_, std::vector<mpz_class>(n_, 0));
  for (unsigned long i = 0; i < n_; ++i) result[i][i] = 1;
  Matrix base = adjacency_;
  for (unsigned long e = exponent; e > 0; e >>= 1) {
    if (e & 1UL) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  std::unique_lock lock(mutex_);
  return powers_.try_emplace(exponent, std::move(result)).first->second;
}

mpz_class WalkTable::closed_walks(unsigned long length) const {
  const Matrix m = power(length);
  mpz_class trace = 0;
  for (unsigned long i = 0; i < n_; ++i) trace += m[i][i];
  return trace;
}

mpz_class path_walks(unsigned long vertex_count, unsigned long length) {
  return WalkTable(vertex_count).closed_walks(length);
}

std::vector<HighReal> chebyshev_path_eigenvalues(unsigned long vertex_count, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  const HighReal step = HighReal::pi(w) / HighReal(static_cast<long>(vertex_count + 1), w);
  std::vector<HighReal> out;
  out.reserve(vertex_count);
  for (unsigned long j = 1; j <= vertex_count; ++j) out.push_back(cos(step * static_cast<long>(j)) * 2);
  return out;
}

std::vector<JeffereyRow> jefferey_rows(unsigned long n_max, const PrecisionPolicy& policy) {
  const int w = policy.working_digits();
  const HighReal limit = HighReal::pow10(-(policy.target_digits - kRoundingMargin), w);
  const HighReal pi_over_7 = HighReal::pi(w) / 7;
  const std::array<HighReal, 3> cosines{cos(pi_over_7), cos(pi_over_7 * 2), cos(pi_over_7 * 3)};
  const auto spec = a198636_spec();
  const auto recurrence = recurrence_terms(spec, n_max + 1);
  const WalkTable p6(6);

  std::vector<JeffereyRow> rows;
  for (unsigned long n = 0; n <= n_max; ++n) {
    HighReal sum(w);
    for (const auto& c : cosines) sum += pow(c, static_cast<long>(2 * n));
    HighReal trig = sum * HighReal(mpz_class(mpz_class(1) << (2 * n)), w);
    const mpz_class nearest = trig.round_to_integer();
    if (!(abs(trig - HighReal(nearest, w)) < limit)) {
      throw Error(ErrorCode::PrecisionExhausted,
                  "trig sum for n = " + std::to_string(n) + " is not within rounding distance of an integer");
    }
    rows.push_back(JeffereyRow{n, recurrence[n], trace_power_sum(-1, 2, n), mpz_class(p6.closed_walks(2 * n) / 2),
                               std::move(trig)});
  }
  return rows;
}

bool jefferey_check(unsigned long n_max, const PrecisionPolicy& policy) {
  for (const auto& row : jefferey_rows(n_max, policy)) {
    if (row.trig.round_to_integer() != row.recurrence) return false;
    if (row.trace != row.recurrence || row.walks_half != row.recurrence) return false;
  }
  return true;
}

}  // namespace cubicfields
