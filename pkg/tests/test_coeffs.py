import math
from fractions import Fraction

import pytest

from rseries import coeffs
from rseries.config import Limits
from rseries.errors import BudgetExceededError


F = Fraction


class TestQTable:
    def test_small_values(self):
        t = coeffs.q_table(3, 3)
        assert t.at(3, 3) == 2

    def test_triangular_cell(self):
        t = coeffs.q_table(5, 15)
        assert t.at(5, 15) == 1

    def test_row_zero(self):
        t = coeffs.q_table(0, 4)
        assert t.row(0) == (1, 0, 0, 0, 0)

    def test_cell_budget(self):
        with pytest.raises(BudgetExceededError):
            coeffs.q_table(10_000, 10_000, limits=Limits(cell_budget=100))


class TestRTable:
    def test_known_cells(self):
        assert coeffs.r_table(5, 5).at(5, 5) == F(37, 60)
        assert coeffs.r_table(2, 3).at(2, 3) == F(1, 2)
        assert coeffs.r_table(4, 10).at(4, 10) == F(1, 24)

    def test_prefix_stability(self):
        # row n agrees with every later row on columns k <= n
        t = coeffs.r_table(12, 40)
        for n in range(12):
            for k in range(n + 1):
                assert t.at(n, k) == t.at(12, k)

    def test_triangular_cutoff_and_diagonal(self):
        t = coeffs.r_table(8, coeffs.triangular(8))
        for n in range(9):
            tri = coeffs.triangular(n)
            assert t.at(n, tri) == F(1, math.factorial(n))
            for k in range(tri + 1, t.k_max + 1):
                assert t.at(n, k) == 0

    def test_row_sums(self):
        k_max = coeffs.triangular(10)
        tq = coeffs.q_table(10, k_max)
        tr = coeffs.r_table(10, k_max)
        for n in range(11):
            assert tq.row_sum(n) == 2 ** n
            assert tr.row_sum(n) == n + 1


class TestRoutesAgree:
    @pytest.mark.parametrize("builder", [coeffs.q_table, coeffs.r_table])
    def test_three_routes(self, builder):
        base = builder(10, 55, method="two_term")
        assert builder(10, 55, method="full_recurrence").rows == base.rows
        assert builder(10, 55, method="product").rows == base.rows

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            coeffs.r_table(2, 2, method="magic")


class TestSeries:
    def test_r_series_first_values(self):
        s = coeffs.r_series(5)
        assert s.coeffs == (F(1), F(1), F(1, 2), F(5, 6), F(7, 12), F(37, 60))

    def test_r_series_empty_product(self):
        assert coeffs.r_series(0).coeffs == (F(1),)

    def test_r_series_k6(self):
        # brute force over {6},{1,5},{2,4},{1,2,3}
        expected = F(1, 6) + F(1, 5) + F(1, 8) + F(1, 6)
        assert expected == F(79, 120)
        assert coeffs.r_series(6).coeffs[6] == expected

    def test_q_series_first_values(self):
        assert coeffs.q_series(5).coeffs == (1, 1, 1, 2, 2, 3)
        assert coeffs.q_series(0).coeffs == (1,)
        assert coeffs.q_series(9).coeffs[9] == 8

    def test_series_matches_table_rows(self):
        s = coeffs.r_series(12)
        t = coeffs.r_table(12, 12)
        for k in range(13):
            assert s.coeffs[k] == t.at(min(12, k), k)

    def test_series_budget(self):
        with pytest.raises(BudgetExceededError):
            coeffs.r_series(1000, limits=Limits(series_max_k=10))

    def test_denominator_divides_factorial(self):
        s = coeffs.r_series(20)
        for k, c in enumerate(s.coeffs):
            if k:
                assert math.factorial(k) % c.denominator == 0


class TestROf:
    def test_values(self):
        assert coeffs.r_of(0) == 1
        assert coeffs.r_of(4) == F(7, 12)
        # sum over {7},{1,6},{2,5},{3,4},{1,2,4}
        assert coeffs.r_of(7) == F(1, 7) + F(1, 6) + F(1, 10) + F(1, 12) + F(1, 8)


class TestFloatPipeline:
    def test_small_exact(self):
        assert coeffs.r_series_float(2) == [1.0, 1.0, 0.5]

    def test_matches_table_value(self):
        assert coeffs.r_series_float(5)[5] == pytest.approx(37 / 60, abs=1e-12)

    def test_agrees_with_exact_pipeline(self):
        K = 200
        exact = coeffs.r_series(K).coeffs
        approx = coeffs.r_series_float(K)
        for k in range(K + 1):
            assert abs(approx[k] - float(exact[k])) <= 1e-9 * float(exact[k])
