#include <doctest.h>

#include <thread>

#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"
#include "cubicfields/roots.hpp"
#include "cubicfields/sequences.hpp"
#include "support.hpp"

using namespace cubicfields;

namespace {

std::vector<long> as_longs(const std::vector<mpz_class>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("trace_power_sum examples") {
    std::vector<long> k2;
    for (unsigned long n = 0; n <= 6; ++n) k2.push_back(trace_power_sum(-1, 2, n).get_si());
    CHECK(k2 == std::vector<long>{3, 5, 13, 38, 117, 370, 1186});
    for (long h = -7; h <= 7; ++h) CHECK(trace_power_sum(h, 1, 1) == h);
    std::vector<long> k1;
    for (unsigned long n = 0; n <= 4; ++n) k1.push_back(trace_power_sum(-1, 1, n).get_si());
    CHECK(k1 == std::vector<long>{3, -1, 5, -4, 13});
  }

  TEST_CASE("trace_power_sum against naive products and real power sums") {
    const PrecisionPolicy policy(40);
    for (long h = -4; h <= 4; ++h) {
      const ZeroTriple zt = scp_zeros(h, policy);
      for (unsigned long k = 1; k <= 3; ++k)
        for (unsigned long n = 0; n <= 8; ++n) {
          const mpz_class exact = trace_power_sum(h, k, n);
          CHECK(exact == testing::naive_trace(h, k * n));
          HighReal sum(policy.working_digits());
          for (const auto& z : zt.zeros) sum += pow(z, static_cast<long>(k * n));
          CHECK(sum.round_to_integer() == exact);
        }
    }
  }

  TEST_CASE("char_poly_of_power") {
    const RecurrenceSpec k2 = char_poly_of_power(-1, 2);
    CHECK(k2.c2 == 5);
    CHECK(k2.c1 == 6);
    CHECK(k2.c0 == 1);
    CHECK(k2.initial == std::array<mpz_class, 3>{3, 5, 13});
    for (long h = -5; h <= 5; ++h) {
      const RecurrenceSpec k1 = char_poly_of_power(h, 1);
      CHECK(k1.c2 == h);
      CHECK(k1.c1 == -(h + 3));
      CHECK(k1.c0 == 1);
    }
    const RecurrenceSpec k3 = char_poly_of_power(-1, 3);
    CHECK(k3.c2 == -4);
    CHECK(k3.c1 == -11);
    CHECK(k3.c0 == 1);
  }

  TEST_CASE("power sequences satisfy their characteristic recurrences") {
    for (long h = -5; h <= 5; ++h) {
      std::vector<mpz_class> a;
      for (unsigned long n = 0; n <= 33; ++n) a.push_back(trace_power_sum(h, 1, n));
      for (unsigned long n = 0; n + 3 <= 33; ++n) CHECK(a[n + 3] == h * a[n + 2] + (h + 3) * a[n + 1] + a[n]);
    }
    for (long h = -3; h <= 3; ++h)
      for (unsigned long k = 1; k <= 4; ++k) {
        const RecurrenceSpec spec = char_poly_of_power(h, k);
        const auto terms = recurrence_terms(spec, 21);
        for (unsigned long n = 0; n <= 20; ++n) CHECK(terms[n] == trace_power_sum(h, k, n));
        CHECK(power(companion_matrix(h), k).determinant() == 1);
      }
  }

  TEST_CASE("a198636 recurrence") {
    const RecurrenceSpec spec = a198636_spec();
    CHECK(recurrence_eval(spec, 3) == 38);
    CHECK(recurrence_eval(spec, 6) == 1186);
    CHECK(recurrence_eval(spec, 10) == trace_power_sum(-1, 2, 10));
    CHECK(as_longs(recurrence_terms(spec, 7)) == std::vector<long>{3, 5, 13, 38, 117, 370, 1186});
    CHECK(recurrence_terms(spec, 0).empty());
    CHECK(recurrence_terms(spec, 2).size() == 2);
    // large index stays exact
    CHECK(recurrence_eval(spec, 200) == trace_power_sum(-1, 2, 200));
  }

  TEST_CASE("path walks") {
    CHECK(path_walks(6, 0) == 6);
    CHECK(path_walks(6, 2) == 10);
    CHECK(path_walks(6, 4) == 26);
    CHECK(path_walks(1, 0) == 1);
    CHECK(path_walks(1, 3) == 0);
    for (unsigned long n = 0; n <= 25; ++n) {
      const mpz_class a = recurrence_eval(a198636_spec(), n);
      CHECK(path_walks(6, 2 * n) == 2 * a);
      CHECK(trace_power_sum(-1, 2, n) == a);
      CHECK(path_walks(6, 2 * n + 1) == 0);
    }
  }

  TEST_CASE("walk table is safe under concurrent readers") {
    const WalkTable table(8);
    std::vector<mpz_class> serial;
    for (unsigned long l = 0; l < 40; ++l) serial.push_back(WalkTable(8).closed_walks(l));
    std::vector<std::vector<mpz_class>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (unsigned long i = 0; i < 40; ++i) {
          const unsigned long l = (i * (t + 3)) % 40;
          results[t].push_back(table.closed_walks(l));
          CHECK(results[t].back() == serial[l]);
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  TEST_CASE("chebyshev eigenvalues") {
    const PrecisionPolicy policy(50);
    const int w = policy.working_digits();
    auto two = chebyshev_path_eigenvalues(2, policy);
    CHECK(policy.equal(two[0], HighReal(1L, w)));
    CHECK(policy.equal(two[1], HighReal(-1L, w)));
    CHECK(policy.negligible(chebyshev_path_eigenvalues(1, policy)[0]));
    const auto six = chebyshev_path_eigenvalues(6, policy);
    for (long j = 1; j <= 3; ++j) {
      const HighReal c = cos(HighReal::pi(w) * j / 7) * 2;
      CHECK(policy.equal(six[j - 1], c));
      CHECK(policy.equal(six[6 - j], -c));
    }
    for (unsigned long n = 1; n <= 8; ++n) {
      const auto eig = chebyshev_path_eigenvalues(n, policy);
      for (unsigned long l = 0; l <= 20; ++l) {
        HighReal sum(w);
        for (const auto& e : eig) sum += pow(e, static_cast<long>(l));
        CHECK(abs(sum - HighReal(path_walks(n, l), w)) < HighReal::pow10(-30, w));
      }
    }
  }

  TEST_CASE("jefferey check") {
    CHECK(jefferey_check(6, PrecisionPolicy(40)));
    CHECK(jefferey_check(25, PrecisionPolicy(60)));
    const auto rows = jefferey_rows(6, PrecisionPolicy(40));
    CHECK(rows[0].recurrence == 3);
    CHECK(rows[6].trace == 1186);
    // 4^n cos^(2n) sums grow past the guard digits: too little precision is refused
    try {
      jefferey_rows(60, PrecisionPolicy(12, 0));
      FAIL("expected PrecisionExhausted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PrecisionExhausted);
    }
  }
}
