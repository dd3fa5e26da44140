"""Ramanujan cubic polynomials, Gaussian periods and cube-root identities.

Real inputs are expression strings ("-3/2", "3*sqrt(2)"); real outputs are
fixed-point strings carrying exactly ``digits`` decimals.
"""

from ._core import (
    CubicFieldsError,
    a198636,
    canonical,
    catalog,
    cubic_cosets,
    extended_check,
    gauss_check,
    gaussian_periods,
    is_rcp,
    jefferey_check,
    oracle_roots,
    path_walks,
    period_differences,
    period_minimal_poly,
    ramanujan_check,
    rcp_through,
    rcp_zeros,
    scp_zeros,
    shanks_primes,
    solve_cubic,
    trace_power_sum,
    verify,
    verify_named,
)

__all__ = [
    "CubicFieldsError",
    "a198636",
    "canonical",
    "catalog",
    "cubic_cosets",
    "extended_check",
    "gauss_check",
    "gaussian_periods",
    "is_rcp",
    "jefferey_check",
    "oracle_roots",
    "path_walks",
    "period_differences",
    "period_minimal_poly",
    "ramanujan_check",
    "rcp_through",
    "rcp_zeros",
    "scp_zeros",
    "shanks_primes",
    "solve_cubic",
    "trace_power_sum",
    "verify",
    "verify_named",
]
