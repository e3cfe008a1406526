"""Exact coefficients and the asymptotic constant of prod(1 + x^k/k)."""

from .coeffs import (
    CoeffTable,
    TruncatedSeries,
    q_series,
    q_table,
    r_of,
    r_series,
    r_series_float,
    r_table,
)
from .config import DEFAULT_LIMITS, Limits
from .constant import (
    ConstantEstimate,
    DeltaApproximation,
    ZetaValue,
    constant_c,
    delta_m,
    delta_tail_bound,
    harmonic_oracle,
    zeta_minus_one,
)
from .errors import BudgetExceededError, InadequateTruncationError
from .partitions import Partition, enum_distinct_partitions, ip, q_oracle, r_oracle
from .asymptotics import eval_R_partial, eval_lnR_series, limit_probe

__version__ = "0.1.0"
