import math

import pytest

import cubicfields as cf


def test_scp_zeros_heptagon():
    zeros = cf.scp_zeros("-1", digits=40)
    expected = sorted((2 * math.cos(2 * math.pi * k / 7) for k in (1, 2, 4)), reverse=True)
    assert [float(z) for z in zeros] == pytest.approx(expected, abs=1e-15)
    assert all(len(z.split(".")[1]) == 40 for z in zeros)


def test_edge_case_and_scaled_zeros():
    assert cf.scp_zeros("-3/2", digits=20) == ["1." + "0" * 20, "-0.5" + "0" * 19, "-2." + "0" * 20]
    assert [float(z) for z in cf.rcp_zeros("-3/2", "2", digits=20)] == [4.0, 1.0, -2.0]


def test_solvers_agree():
    coeffs = ["1", "1", "-2", "-1"]
    assert cf.solve_cubic(coeffs, digits=30) == cf.oracle_roots(coeffs, digits=30)
    assert cf.is_rcp(coeffs)


def test_rcp_through():
    assert cf.rcp_through("2", "1") == "-3/2"


def test_periods_and_shanks_primes():
    ps = cf.gaussian_periods(13, digits=30)
    assert ps["cosets"] == [[1, 5, 8, 12], [2, 3, 10, 11], [4, 6, 7, 9]]
    assert ps["h"] == 1 and ps["L"] == -5
    assert sum(float(v) for v in ps["values"]) == pytest.approx(-1.0)
    assert [p for _, p in cf.shanks_primes(139)] == [7, 13, 19, 37, 79, 97, 139]
    assert cf.period_minimal_poly(2) == [1, 1, -6, -7]
    ds = cf.period_differences(7, digits=30)
    for d in map(float, ds["deltas"]):
        assert d**3 - 7 * d + 7 == pytest.approx(0.0, abs=1e-12)


def test_identities():
    assert cf.ramanujan_check("-1", "-1")["passed"]
    assert cf.extended_check("8", "1")["passed"]
    assert cf.gauss_check(2)["passed"]
    for name in ("cos2pi7", "sqrt2", "pi_cos", "pi_cbrt"):
        assert cf.verify_named(name)["passed"], name
    assert not cf.verify("pi", "22/7", digits=4)["passed"]
    assert cf.canonical("(1) + (2*3)") == cf.canonical(cf.canonical("(1) + (2*3)"))


def test_sequences():
    assert cf.a198636(7) == [3, 5, 13, 38, 117, 370, 1186]
    assert cf.trace_power_sum(-1, 2, 6) == 1186
    assert cf.path_walks(6, 4) == 26
    assert cf.a198636(120)[-1] == cf.trace_power_sum(-1, 2, 119)
    assert cf.jefferey_check(25)


def test_errors_carry_codes():
    with pytest.raises(cf.CubicFieldsError) as info:
        cf.verify_named("nope")
    assert info.value.code == "UnknownIdentity"
    with pytest.raises(cf.CubicFieldsError) as info:
        cf.rcp_zeros("1", "0")
    assert info.value.code == "InvalidScale"
    with pytest.raises(cf.CubicFieldsError) as info:
        cf.cubic_cosets(5)
    assert info.value.code == "NoCubicCosets"
