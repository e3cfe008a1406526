"""Brute-force enumeration of partitions into distinct parts.

Independent oracle for the coefficient engine: q(k) is the number of
such partitions of k, and r(k) is the sum over them of the reciprocal
of the product of the parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .config import DEFAULT_LIMITS, Limits
from .errors import BudgetExceededError

__all__ = ["Partition", "enum_distinct_partitions", "ip", "r_oracle", "q_oracle"]


@dataclass(frozen=True)
class Partition:
    """A strictly increasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a >= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be strictly increasing")


def _check_bound(k: int, limits: Limits) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > limits.enum_max_k:
        raise BudgetExceededError(
            f"enumeration of k={k} exceeds the bound {limits.enum_max_k}"
        )


def enum_distinct_partitions(k: int,
                             limits: Limits = DEFAULT_LIMITS) -> list[Partition]:
    """All partitions of k into distinct parts, in lexicographic order
    of their part tuples.  k = 0 yields the single empty partition.
    """
    _check_bound(k, limits)
    out: list[Partition] = []
    stack: list[int] = []

    def descend(remaining: int, smallest: int) -> None:
        if remaining == 0:
            out.append(Partition(tuple(stack)))
            return
        for p in range(smallest, remaining + 1):
            stack.append(p)
            descend(remaining - p, p + 1)
            stack.pop()

    descend(k, 1)
    return out


def ip(S: Partition) -> Fraction:
    """Reciprocal of the product of the parts; undefined for the empty set."""
    if not S.parts:
        raise ValueError("ip is undefined on the empty partition")
    return Fraction(1, prod(S.parts))


def r_oracle(k: int, limits: Limits = DEFAULT_LIMITS) -> Fraction:
    """r(k) by exhaustive enumeration: sum of ip over all partitions of k."""
    if k == 0:
        return Fraction(1)
    return sum(ip(S) for S in enum_distinct_partitions(k, limits))


def q_oracle(k: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """q(k) by exhaustive enumeration."""
    return len(enum_distinct_partitions(k, limits))
