"""Partial products R_n(x), the polylog expansion of ln R(x), and the
limit expression (1 - x) R(x) that exhibits the asymptotic form C/(1-x).
"""

from __future__ import annotations

import math

from .errors import InadequateTruncationError

__all__ = ["eval_R_partial", "eval_lnR_series", "limit_probe", "polylog",
           "adequate_truncation"]


def eval_R_partial(x: float, n: int) -> float:
    """prod_{k=1..n} (1 + x^k / k), evaluated left to right in doubles.

    At x = 1 this equals n + 1 up to rounding.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be positive")
    acc = 1.0
    x_pow = 1.0
    for k in range(1, n + 1):
        x_pow *= x
        if x_pow == 0.0:
            break
        acc *= 1.0 + x_pow / k
    return acc


def polylog(s: int, y: float, tol: float = 1e-15) -> float:
    """Li_s(y) = sum_{j>=1} y^j / j^s by direct summation for 0 <= y < 1.

    Stops once the geometric tail bound y^(J+1)/(1-y) drops below tol.
    """
    if not 0.0 <= y < 1.0:
        raise ValueError("polylog summation requires 0 <= y < 1")
    if y == 0.0:
        return 0.0
    acc = 0.0
    y_pow = 1.0
    j = 0
    while True:
        j += 1
        y_pow *= y
        acc += y_pow / j ** s
        if y_pow * y / (1.0 - y) < tol:
            return acc


def eval_lnR_series(x: float, terms: int, tol: float = 1e-12) -> float:
    """ln R(x) as the alternating polylog series
    sum_{s=1..terms} (-1)^(s+1)/s * Li_s(x^s), with Li_1(x) = -ln(1-x).
    """
    if not 0.0 <= x < 1.0:
        raise ValueError("x must lie in [0, 1); the leading term diverges at 1")
    if terms < 1:
        raise ValueError("terms must be positive")
    if x == 0.0:
        return 0.0
    total = -math.log(1.0 - x)
    for s in range(2, terms + 1):
        total += (-1) ** (s + 1) / s * polylog(s, x ** s, tol)
    return total


def adequate_truncation(x: float) -> int:
    """Smallest factor count accepted by limit_probe at this x: the
    neglected log-mass is below exp(-n(1-x)) in order of magnitude.
    """
    return math.ceil(50.0 / (1.0 - x))


def limit_probe(x: float, n: int) -> float:
    """(1 - x) * R_n(x); approaches the asymptotic constant as x -> 1-
    provided n is large enough that the truncation is adequate.
    """
    if not 0.0 < x < 1.0:
        raise ValueError("x must lie in (0, 1)")
    needed = adequate_truncation(x)
    if n < needed:
        raise InadequateTruncationError(
            f"n={n} is below the adequate truncation {needed} for x={x}"
        )
    return (1.0 - x) * eval_R_partial(x, n)
