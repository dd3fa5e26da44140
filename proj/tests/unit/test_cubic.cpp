#include <doctest.h>

#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"
#include "cubicfields/expression.hpp"
#include "cubicfields/roots.hpp"
#include "support.hpp"

using namespace cubicfields;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

bool coeffs_are(const Cubic& c, long a3, long a2, long a1, long a0) {
  const auto& k = c.coefficients();
  return k[0].is_exact() && k[0].exact() == a3 && k[1].exact() == a2 && k[2].exact() == a1 && k[3].exact() == a0;
}

}  // namespace

TEST_SUITE("cubic_poly") {
  TEST_CASE("build_rcp examples") {
    CHECK(coeffs_are(build_rcp({-1, -1}), 1, 1, -2, -1));
    CHECK(coeffs_are(build_rcp({0, 2}), 1, 0, -12, 8));
    CHECK(code_of([] { build_rcp({1, 0}); }) == ErrorCode::InvalidScale);

    // (1/6, 3 sqrt 2) -> x^3 + (sqrt2/2) x^2 - 57 x + 54 sqrt2
    const int w = 60;
    const Scalar s = parse_scalar("3*sqrt(2)", w);
    const Cubic c = build_rcp({Scalar::ratio(1, 6), s});
    const HighReal r2 = sqrt(HighReal(2L, w));
    CHECK(testing::within(c.a2().to_high(w), r2 / 2, 55));
    CHECK(testing::within(c.a1().to_high(w), HighReal(-57L, w), 55));
    CHECK(testing::within(c.a0().to_high(w), r2 * 54, 55));
    CHECK(is_rcp(c, PrecisionPolicy(40)));
  }

  TEST_CASE("is_rcp") {
    const PrecisionPolicy policy(40);
    CHECK(is_rcp(1, -2, -1, policy));
    CHECK_FALSE(is_rcp(0, 0, 1, policy));
    CHECK_FALSE(is_rcp(1, -2, 0, policy));
    const int w = policy.working_digits();
    const Scalar r2 = parse_scalar("sqrt(2)", w);
    CHECK(is_rcp(r2 / Scalar(2), -57, Scalar(54) * r2, policy));
    // relation holds with r < 0 only through the real cube root
    CHECK(is_rcp(Scalar::ratio(3, 2), Scalar::ratio(-3, 2), -1, policy));
  }

  TEST_CASE("rcp_params_from_coeffs") {
    const PrecisionPolicy policy(40);
    auto p = rcp_params_from_coeffs(1, -2, -1, policy);
    CHECK(p.h.exact() == -1);
    CHECK(p.s.exact() == -1);
    p = rcp_params_from_coeffs(0, -3, 1, policy);
    CHECK(p.h.exact() == 0);
    CHECK(p.s.exact() == 1);
    p = rcp_params_from_coeffs(Scalar::ratio(3, 2), Scalar::ratio(-3, 2), -1, policy);
    CHECK(p.h.exact() == mpq_class(-3, 2));
    CHECK(p.s.exact() == -1);
    CHECK(code_of([&] { rcp_params_from_coeffs(1, 1, 0, policy); }) == ErrorCode::NotAnRcp);
    CHECK(code_of([&] { rcp_params_from_coeffs(0, 0, 1, policy); }) == ErrorCode::NotAnRcp);
  }

  TEST_CASE("build_scp and round trip through params") {
    CHECK(coeffs_are(build_scp(-1), 1, 1, -2, -1));
    CHECK(coeffs_are(build_scp(1), 1, -1, -4, -1));
    const PrecisionPolicy policy(40);
    for (long h = -10; h <= 10; ++h) {
      const Cubic c = build_scp(h);
      const auto params = rcp_params_from_coeffs(c.a2(), c.a1(), c.a0(), policy);
      CHECK(params.h.exact() == h);
      CHECK(params.s.exact() == -1);
    }
  }

  TEST_CASE("witula form") {
    const PrecisionPolicy policy(40);
    // gamma = 3, r = 8: zeros 2/(2-3) = -2, (3-1)*2 = 4, ((2-3)/(1-3))*2 = 1
    const Cubic c = build_rcp_witula(3, 8, policy);
    CHECK(coeffs_are(c, 1, -3, -6, 8));
    CHECK(coeffs_are(build_rcp({Scalar::ratio(-3, 2), 2}), 1, -3, -6, 8));
    CHECK(is_rcp(c, policy));
    CHECK(code_of([&] { build_rcp_witula(1, 8, policy); }) == ErrorCode::DegenerateGamma);
    CHECK(code_of([&] { build_rcp_witula(2, 8, policy); }) == ErrorCode::DegenerateGamma);
    CHECK(code_of([&] { build_rcp_witula(3, 0, policy); }) == ErrorCode::InvalidScale);
    // irrational cube root of r
    const Cubic d = build_rcp_witula(Scalar::ratio(1, 2), 5, policy);
    CHECK(is_rcp(d, policy));
  }

  TEST_CASE("tau and discriminant") {
    CHECK(tau(-1).exact() == 7);
    CHECK(tau(Scalar::ratio(-3, 2)).exact() == mpq_class(27, 4));
    // discriminant of the SCP is tau(h)^2
    for (long h = -6; h <= 6; ++h) CHECK(build_scp(h).discriminant().exact() == tau(h).exact() * tau(h).exact());
  }

  TEST_CASE("monic normalisation is idempotent") {
    const Cubic c(2, 4, -6, 8);
    CHECK(coeffs_are(c.monic(), 1, 2, -3, 4));
    CHECK(coeffs_are(c.monic().monic(), 1, 2, -3, 4));
    CHECK(code_of([] { Cubic(0, 1, 2, 3); }) == ErrorCode::NotCubic);
  }

  TEST_CASE("companion matrix") {
    for (long h = -5; h <= 5; ++h) {
      const IntegerMatrix3 m = companion_matrix(h);
      CHECK(m.trace() == h);
      CHECK(m.determinant() == 1);
      // characteristic polynomial x^3 - Tr x^2 + adjTr x - det equals the SCP
      CHECK(m.adjugate_trace() == -(h + 3));
      CHECK(power(m, 0) == IntegerMatrix3::identity());
      CHECK(power(m, 5) == m * m * m * m * m);
    }
  }
}
