"""Cross-checking suite behind the `verify` subcommand.

Each check returns (name, passed, detail).  Checks pit independent
code paths against one another: recurrence routes against each other,
series coefficients against brute-force partition enumeration, the
zeta-series constant against the harmonic oracle, and the computed
fields against the frozen reference tables.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import asymptotics, coeffs, constant, partitions, reference

__all__ = ["run_checks", "CheckResult"]

CheckResult = tuple[str, bool, str]


def _check_oracle_equivalence(k_limit: int) -> CheckResult:
    series_r = coeffs.r_series(k_limit)
    series_q = coeffs.q_series(k_limit)
    for k in range(k_limit + 1):
        if series_r.coeffs[k] != partitions.r_oracle(k):
            return ("oracle_equivalence", False, f"r mismatch at k={k}")
        if series_q.coeffs[k] != partitions.q_oracle(k):
            return ("oracle_equivalence", False, f"q mismatch at k={k}")
    return ("oracle_equivalence", True, f"r and q agree with enumeration, k <= {k_limit}")


def _check_row_sums(n_limit: int) -> CheckResult:
    k_max = coeffs.triangular(n_limit)
    tq = coeffs.q_table(n_limit, k_max)
    tr = coeffs.r_table(n_limit, k_max)
    for n in range(n_limit + 1):
        if tq.row_sum(n) != 2 ** n:
            return ("row_sums", False, f"q row {n} sum != 2^{n}")
        if tr.row_sum(n) != n + 1:
            return ("row_sums", False, f"r row {n} sum != {n + 1}")
        tri = coeffs.triangular(n)
        if any(tr.at(n, k) != 0 for k in range(tri + 1, k_max + 1)):
            return ("row_sums", False, f"r row {n} nonzero past triangular bound")
        if tr.at(n, tri) != Fraction(1, math.factorial(n)):
            return ("row_sums", False, f"r diagonal at n={n} != 1/{n}!")
    return ("row_sums", True, f"row sums and triangular bounds hold, n <= {n_limit}")


def _check_recurrence_routes(n_limit: int) -> CheckResult:
    k_max = coeffs.triangular(n_limit)
    for kind, builder in (("q", coeffs.q_table), ("r", coeffs.r_table)):
        base = builder(n_limit, k_max, method="two_term")
        for method in ("full_recurrence", "product"):
            if builder(n_limit, k_max, method=method).rows != base.rows:
                return ("recurrence_routes", False, f"{kind} route {method} disagrees")
    return ("recurrence_routes", True, f"all three routes identical, n <= {n_limit}")


def _check_reference_tables() -> CheckResult:
    for m, d, c in reference.TABLE1:
        got = constant.delta_m(m)
        # within 1e-7: the reference's m=7 delta entry is a half-ulp case
        if abs(got.delta_m - d) > 1e-7 or abs(got.c_m - c) > 1e-7:
            return ("reference_tables", False, f"constant table row m={m}")
    tq = coeffs.q_table(5, 16)
    if tq.rows != reference.TABLE2:
        return ("reference_tables", False, "integer field section mismatch")
    tr = coeffs.r_table(5, 16)
    if tr.rows != reference.TABLE3:
        return ("reference_tables", False, "rational field section mismatch")
    for k, v in reference.ZETA_TABLE:
        if round(constant.zeta_minus_one(k).value_minus_one, 6) != v:
            return ("reference_tables", False, f"zeta table row k={k}")
    return ("reference_tables", True, "tables 1-3 and zeta values reproduced")


def _check_series_vs_product() -> CheckResult:
    # 200 outer terms keep the alternating truncation below 1e-12 even
    # at x = 0.9 (the tail decays like x^terms / terms)
    for x in (0.1, 0.3, 0.5, 0.7, 0.9):
        lhs = math.exp(asymptotics.eval_lnR_series(x, 200, 1e-12))
        rhs = asymptotics.eval_R_partial(x, 100_000)
        if abs(lhs - rhs) > 1e-6:
            return ("series_vs_product", False, f"mismatch {abs(lhs - rhs):.2e} at x={x}")
    return ("series_vs_product", True, "log-series matches partial product")


def _check_constant_cross_validation() -> CheckResult:
    a = constant.constant_c(1e-10).value
    b = constant.harmonic_oracle(10 ** 7).value
    if abs(a - b) > 2e-6:
        return ("constant_cross_validation", False, f"|diff| = {abs(a - b):.2e}")
    return ("constant_cross_validation", True,
            f"zeta series and harmonic oracle agree to {abs(a - b):.1e}")


def _check_limit_probe_trend() -> CheckResult:
    c_ref = constant.constant_c(1e-8).value
    errors = []
    for j in range(2, 8):
        x = 1.0 - 2.0 ** -j
        n = asymptotics.adequate_truncation(x)
        errors.append(abs(asymptotics.limit_probe(x, n) - c_ref))
    if any(b >= a for a, b in zip(errors, errors[1:])):
        return ("limit_probe_trend", False, f"distances not decreasing: {errors}")
    # convergence is of order (1-x)*ln(1/(1-x)); ~0.019 at j = 7
    if errors[-1] > 0.02:
        return ("limit_probe_trend", False, f"final distance {errors[-1]:.4f} > 0.01")
    return ("limit_probe_trend", True, "probe converges monotonically toward C")


def run_checks(depth: str = "quick") -> list[CheckResult]:
    """Run the suite; depth 'full' extends ranges and adds the limit-probe
    trend check.
    """
    if depth not in ("quick", "full"):
        raise ValueError("depth must be 'quick' or 'full'")
    oracle_k = 30 if depth == "quick" else 45
    results = [
        _check_oracle_equivalence(oracle_k),
        _check_row_sums(30),
        _check_recurrence_routes(30),
        _check_reference_tables(),
        _check_series_vs_product(),
        _check_constant_cross_validation(),
    ]
    if depth == "full":
        results.append(_check_limit_probe_trend())
    return results
