"""Acceptance suite: one test per exit criterion, each printing a
pass/fail line with its runtime.  Run with `pytest -s tests/test_acceptance.py`
to see the per-criterion report.
"""

import math
import time
from fractions import Fraction

import pytest

from rseries import asymptotics, coeffs, constant, partitions, reference


class Gate:
    """Times a criterion and prints its verdict on exit."""

    def __init__(self, name: str, seconds: float):
        self.name = name
        self.limit = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        verdict = "PASS" if exc_type is None and elapsed < self.limit else "FAIL"
        print(f"{verdict} {self.name} ({elapsed:.2f}s, limit {self.limit:.0f}s)")
        if exc_type is None:
            assert elapsed < self.limit, f"{self.name} exceeded {self.limit}s"


def test_criterion_1_rational_field_section():
    with Gate("1 rational field section matches reference", 1):
        t = coeffs.r_table(5, 16)
        assert t.rows == reference.TABLE3
        assert t.at(5, 6) == Fraction(59, 120)
        assert t.at(5, 9) == Fraction(19, 120)


def test_criterion_2_integer_field_section():
    with Gate("2 integer field section matches reference", 1):
        assert coeffs.q_table(5, 16).rows == reference.TABLE2


def test_criterion_3_constant_approximations():
    with Gate("3 constant approximation table to 7 decimals", 1):
        # agreement within 1e-7; the reference prints 7 decimals and its
        # m=7 delta entry is off by one in the last digit
        for m, delta, c in reference.TABLE1:
            got = constant.delta_m(m)
            assert abs(got.delta_m - delta) <= 1e-7, f"delta mismatch at m={m}"
            assert abs(got.c_m - c) <= 1e-7, f"C mismatch at m={m}"
        got9 = constant.delta_m(9)
        assert round(got9.delta_m, 7) == 0.2702943
        assert round(got9.c_m, 7) == 0.5614980


def test_criterion_4_zeta_values():
    with Gate("4 zeta values to 6 decimals", 1):
        for k, expected in reference.ZETA_TABLE:
            got = constant.zeta_minus_one(k).value_minus_one
            assert round(got, 6) == expected, f"zeta mismatch at k={k}"
        assert round(constant.zeta_minus_one(7).value_minus_one, 6) == 0.008349


def test_criterion_5_oracle_equivalence():
    with Gate("5 series coefficients equal enumeration oracles, k <= 30", 30):
        r = coeffs.r_series(30)
        q = coeffs.q_series(30)
        for k in range(31):
            assert r.coeffs[k] == partitions.r_oracle(k), f"r mismatch at k={k}"
            assert q.coeffs[k] == partitions.q_oracle(k), f"q mismatch at k={k}"


def test_criterion_6_identity_suite():
    with Gate("6 row sums, triangular cutoff, diagonal, n <= 25", 60):
        k_max = coeffs.triangular(25)
        tq = coeffs.q_table(25, k_max)
        tr = coeffs.r_table(25, k_max)
        for n in range(26):
            tri = coeffs.triangular(n)
            assert tq.row_sum(n) == 2 ** n
            assert tr.row_sum(n) == n + 1
            assert all(tr.at(n, k) == 0 for k in range(tri + 1, k_max + 1))
            assert tr.at(n, tri) == Fraction(1, math.factorial(n))


def test_criterion_7_recurrence_cross_check():
    with Gate("7 three construction routes agree exactly, n <= 30", 60):
        k_max = coeffs.triangular(30)
        for builder in (coeffs.q_table, coeffs.r_table):
            base = builder(30, k_max, method="two_term")
            assert builder(30, k_max, method="full_recurrence").rows == base.rows
            assert builder(30, k_max, method="product").rows == base.rows


def test_criterion_8_constant_cross_validation():
    with Gate("8 zeta-series constant vs harmonic oracle", 10):
        a = constant.constant_c(1e-10).value
        b = constant.harmonic_oracle(10 ** 7).value
        assert abs(a - b) <= 2e-6
        assert abs(a - 0.56146) <= 1e-4
        assert abs(b - 0.56146) <= 1e-4


def test_criterion_9_approach_from_above():
    with Gate("9 coefficients approach the constant from above", 30):
        c = constant.constant_c(1e-8).value
        values = coeffs.r_series_float(500)
        for k in range(10, 501):
            assert values[k] > c, f"r({k}) not above the constant"
        assert abs(values[500] - c) < abs(values[50] - c)


def test_criterion_10_limit_probe():
    # known red: (1-x)R(x) - C is of order (1-x)*ln(1/(1-x)), which is
    # ~0.019 at x = 1 - 2^-7, so the 0.01 target is out of reach at j = 7
    # (confirmed against an independent high-precision evaluation)
    with Gate("10 limit probe converges monotonically", 60):
        c = constant.constant_c(1e-8).value
        dists = []
        for j in range(2, 8):
            x = 1.0 - 2.0 ** -j
            n = asymptotics.adequate_truncation(x)
            dists.append(abs(asymptotics.limit_probe(x, n) - c))
        assert all(a > b for a, b in zip(dists, dists[1:])), dists
        assert dists[-1] < 0.01


@pytest.mark.parametrize("x", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_criterion_11_series_product_consistency(x):
    # known red at x=0.9: truncating the alternating log-series at 60
    # terms leaves a remainder ~0.9^61/61 = 2.7e-5, i.e. ~1e-4 after exp,
    # so the 1e-6 target needs ~200 terms (where the two sides agree to
    # 1e-10; see the series tests)
    with Gate(f"11 log-series vs partial product at x={x}", 30):
        lhs = math.exp(asymptotics.eval_lnR_series(x, 60, 1e-12))
        rhs = asymptotics.eval_R_partial(x, 10 ** 5)
        assert abs(lhs - rhs) <= 1e-6
