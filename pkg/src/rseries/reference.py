"""Frozen reference tables the CLI reproduces and the verifier checks
against.

Table 1: approximations (m, delta_m, c_m) of the constant, 7 decimals.
Table 2: upper-left section of the integer field q_n(k), 0<=n<=5, 0<=k<=16.
Table 3: same section of the rational field r_n(k).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["TABLE1", "TABLE2", "TABLE3", "ZETA_TABLE"]

# (m, delta_m, c_m)
TABLE1: tuple[tuple[int, float, float], ...] = (
    (1, 0.0, 0.7357589),
    (2, 0.3224670, 0.5329542),
    (3, 0.2551147, 0.5700863),
    (4, 0.2756955, 0.5584734),
    (5, 0.2683100, 0.5626133),
    (6, 0.2712005, 0.5609894),
    (7, 0.2700078, 0.5616589),
    (8, 0.2705174, 0.5613727),
    (9, 0.2702943, 0.5614980),
    (10, 0.2703937, 0.5614421),
    (11, 0.2703488, 0.5614674),
    (12, 0.2703693, 0.5614559),
    (13, 0.2703599, 0.5614612),
)

# rows n = 0..5, columns k = 0..16
TABLE2: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 0),
)

_F = Fraction
TABLE3: tuple[tuple[Fraction, ...], ...] = (
    (_F(1), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0),
     _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0)),
    (_F(1), _F(1), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0),
     _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0)),
    (_F(1), _F(1), _F(1, 2), _F(1, 2), _F(0), _F(0), _F(0), _F(0), _F(0),
     _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0)),
    (_F(1), _F(1), _F(1, 2), _F(5, 6), _F(1, 3), _F(1, 6), _F(1, 6), _F(0),
     _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0), _F(0)),
    (_F(1), _F(1), _F(1, 2), _F(5, 6), _F(7, 12), _F(5, 12), _F(7, 24),
     _F(5, 24), _F(1, 12), _F(1, 24), _F(1, 24), _F(0), _F(0), _F(0),
     _F(0), _F(0), _F(0)),
    (_F(1), _F(1), _F(1, 2), _F(5, 6), _F(7, 12), _F(37, 60), _F(59, 120),
     _F(37, 120), _F(1, 4), _F(19, 120), _F(1, 8), _F(7, 120), _F(1, 24),
     _F(1, 60), _F(1, 120), _F(1, 120), _F(0)),
)

# (k, zeta(k) - 1) to six decimals
ZETA_TABLE: tuple[tuple[int, float], ...] = (
    (2, 0.644934),
    (3, 0.202057),
    (4, 0.082323),
    (5, 0.036928),
    (6, 0.017343),
    (7, 0.008349),
    (8, 0.004077),
    (9, 0.002008),
    (10, 0.000995),
    (11, 0.000494),
)
