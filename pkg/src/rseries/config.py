"""Resource limits shared across the engines.

All limits are explicit: exceeding one raises, nothing is silently
truncated.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # coefficient tables: n_max * k_max may not exceed this many cells
    cell_budget: int = 10_000_000
    # truncated series: largest admissible degree bound
    series_max_k: int = 100_000
    # partition enumeration: largest k we will enumerate exhaustively
    enum_max_k: int = 60


DEFAULT_LIMITS = Limits()
