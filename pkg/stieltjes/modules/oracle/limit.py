"""Stieltjes constants from the defining limit relation.

    gamma_k(a) = lim_{N -> inf} [ sum_{j=0..N} ln^k(j + a) / (j + a) - ln^(k+1)(N + a) / (k + 1) ]

The partial sums are rearranged so that the large sum and the large logarithmic power never
meet. With f(x) = ln^k(x) / x and F(x) = ln^(k+1)(x) / (k + 1), and x_j = j + a,

    S(N) - f(x_N) / 2 = f(x_0) / 2 - F(x_0) + sum_{j=1..N} d_j,
    d_j = (f(x_{j-1}) + f(x_j)) / 2 - (F(x_j) - F(x_{j-1})),

where each d_j is the difference between a trapezoid and the exact integral of f over one unit
step, O(ln^k(j) / j^3). F(x_j) - F(x_{j-1}) is formed as a difference of logarithms, log1p(1/x),
times sum_i L_j^i L_{j-1}^(k-i), so no term suffers cancellation.

The trapezoid form converges like N^-p poly_k(ln N), p >= 2, and is extrapolated over a
sequence of doubled N. Each power p takes k + 1 Richardson columns with ratio 2^p, one per
power of the logarithm.
"""

import logging
import math
import numbers
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

import numpy as np

from stieltjes.common.constants import (
    DEFAULT_ORACLE_DOUBLINGS,
    DEFAULT_ORACLE_N_BASE,
    DEFAULT_RICHARDSON_DEPTH,
    ORACLE_CHUNK_SIZE,
    ORACLE_K_BUDGET,
    ORACLE_TARGET,
    MethodSelector,
)
from stieltjes.common.decorators import index_check, positive_parameter
from stieltjes.common.exceptions import InvalidConfiguration, OutOfBudget
from stieltjes.common.extrapolation import is_low_confidence, richardson_table
from stieltjes.common.values import ComputedValue

LIMIT_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleConfig:
    """Doubling sequence and extrapolation depth of the limit-relation oracle."""

    n_base: int = DEFAULT_ORACLE_N_BASE
    doublings: int = DEFAULT_ORACLE_DOUBLINGS
    richardson_depth: int = DEFAULT_RICHARDSON_DEPTH

    def __post_init__(self):
        """Validate that every field is a positive integer."""
        for name in ("n_base", "doublings", "richardson_depth"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
                raise InvalidConfiguration(f"{name} must be a positive integer, not {value!r}")


@index_check("k")
@positive_parameter("a")
@index_check("n", minimum=1)
def limit_partial_sum(k: int, a: float, n: int, printed: bool = False) -> float:
    """Return the raw partial sum of the limit relation at N = n.

    With printed=True the summand is ln^k(j + a) / j summed from j = 1, the transcription in
    which the denominator lacks the shift; at k = 0 that sequence tends to Euler's constant
    for every a.
    """
    parts = []
    for start in range(0, n + 1, ORACLE_CHUNK_SIZE):
        j = np.arange(start, min(start + ORACLE_CHUNK_SIZE, n + 1), dtype=np.float64)
        if printed:
            j = j[j >= 1]
            parts.append(math.fsum(np.log(j + a) ** k / j))
        else:
            parts.append(math.fsum(np.log(j + a) ** k / (j + a)))
    return math.fsum(parts) - math.log(n + a) ** (k + 1) / (k + 1)


def _trapezoid_steps(k: int, a: float, start: int, stop: int) -> float:
    """Return the compensated sum of d_j for j in [start, stop)."""
    parts = []
    for chunk in range(start, stop, ORACLE_CHUNK_SIZE):
        chunk_stop = min(chunk + ORACLE_CHUNK_SIZE, stop)
        x = np.arange(chunk - 1, chunk_stop, dtype=np.float64) + a
        logs = np.log(x)
        f = logs**k / x
        lower, upper = logs[:-1], logs[1:]
        power_sum = np.zeros_like(upper)
        for i in range(k + 1):
            power_sum += upper**i * lower ** (k - i)
        steps = 0.5 * (f[:-1] + f[1:]) - np.log1p(1.0 / x[:-1]) * power_sum / (k + 1)
        parts.append(math.fsum(steps))
    return math.fsum(parts)


def trapezoid_sequence(k: int, a: float, checkpoints: Sequence[int]) -> List[float]:
    """Return S(N) - f(x_N) / 2 at each checkpoint N, in one pass over j."""
    log_a = math.log(a)
    head = 0.5 * log_a**k / a - log_a ** (k + 1) / (k + 1)

    sequence = []
    segments = [head]
    previous = 0
    for n in checkpoints:
        segments.append(_trapezoid_steps(k, a, previous + 1, n + 1))
        sequence.append(math.fsum(segments))
        previous = n
    return sequence


@lru_cache(maxsize=256)
def _cached_oracle(k: int, a: float, cfg: OracleConfig) -> ComputedValue:
    """Evaluate the oracle; results are cached per (k, a, configuration)."""
    logger = LIMIT_LOGGER.getChild("gamma_limit_oracle")

    depth = max(cfg.richardson_depth, k + 2)
    doublings = max(cfg.doublings, depth)
    checkpoints = [cfg.n_base * 2**i for i in range(doublings + 1)]
    logger.debug(
        "k=%d a=%r: checkpoints %d..%d, depth %d", k, a, checkpoints[0], checkpoints[-1], depth
    )

    sequence = trapezoid_sequence(k, a, checkpoints)
    table = richardson_table(sequence, log_degree=k, depth=depth)
    diagonal = table[0]
    value = diagonal[depth]
    err_estimate = abs(value - table[1][depth - 1])
    low_confidence = is_low_confidence(diagonal, value)

    for m, entry in enumerate(diagonal):
        logger.debug("Column %d: %r", m, entry)
    if low_confidence:
        logger.warning(
            "Extrapolation tail for gamma_%d(%r) is not monotone; the value is low confidence",
            k,
            a,
        )

    return ComputedValue(
        value=value,
        err_estimate=err_estimate,
        method=MethodSelector.ORACLE,
        work=checkpoints[-1],
        converged=err_estimate <= ORACLE_TARGET * max(1.0, abs(value)),
        diagnostics={
            "checkpoints": tuple(checkpoints),
            "depth": depth,
            "low_confidence": low_confidence,
        },
    )


@index_check("k")
@positive_parameter("a")
def gamma_limit_oracle(k: int, a: float, cfg: OracleConfig = None) -> ComputedValue:
    """Return gamma_k(a) from the limit relation with Richardson extrapolation.

    Raises OutOfBudget for k > 8, where the extrapolated error outgrows every method.
    """
    if k > ORACLE_K_BUDGET:
        raise OutOfBudget(k)
    return _cached_oracle(int(k), float(a), cfg or OracleConfig())
