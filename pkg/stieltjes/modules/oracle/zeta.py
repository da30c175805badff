"""Reference values at integer arguments: Riemann and Hurwitz zeta, and the digamma function.

The zeta sums stop at the first N where the next Euler-Maclaurin correction, m x^(-m-1) / 12,
is below ZETA_TAIL_TARGET, and add the integral of the tail plus half the first omitted term.
"""

import logging
import math
from functools import lru_cache

import numpy as np

from stieltjes.common.constants import DIGAMMA_SERIES_TERMS
from stieltjes.common.decorators import index_check, positive_parameter
from stieltjes.modules.oracle.limit import gamma_limit_oracle

ZETA_LOGGER = logging.getLogger(__name__)

ZETA_TAIL_TARGET = 1e-15


def _cutoff(m: int, a: float) -> int:
    """Return the first N >= 2 with m (N + a)^(-m-1) / 12 below the tail target."""
    n = max(2, math.ceil((m / (12.0 * ZETA_TAIL_TARGET)) ** (1.0 / (m + 1)) - a))
    while m * (n + a) ** (-m - 1) / 12.0 >= ZETA_TAIL_TARGET:
        n += 1
    return n


def _tail_corrected_sum(m: int, a: float) -> float:
    """Sum (n + a)^-m over n >= 0 with the integral tail correction."""
    cutoff = _cutoff(m, a)
    terms = (np.arange(cutoff, dtype=np.float64) + a) ** -m
    x = cutoff + a
    return math.fsum(terms) + x ** (1 - m) / (m - 1) + 0.5 * x**-m


@lru_cache(maxsize=64)
@index_check("m", minimum=2)
def zeta_int(m: int) -> float:
    """Return the Riemann zeta value zeta(m) for an integer m >= 2."""
    return _tail_corrected_sum(m, 1.0)


@lru_cache(maxsize=256)
@index_check("m", minimum=2)
@positive_parameter("a")
def hurwitz_zeta_int(m: int, a: float) -> float:
    """Return the Hurwitz zeta value zeta(m, a) = sum_{n>=0} (n + a)^-m for an integer m >= 2."""
    return _tail_corrected_sum(m, float(a))


@lru_cache(maxsize=1)
def euler_gamma() -> float:
    """Return Euler's constant, gamma_0(1), from the limit-relation oracle."""
    value = gamma_limit_oracle(0, 1.0).value
    ZETA_LOGGER.debug("Euler's constant from the oracle: %r", value)
    return value


@positive_parameter("a")
def digamma_series_ref(a: float) -> float:
    """Return psi(a) from its partial-fraction series.

    psi(a) = -gamma + sum_{n>=0} (1 / (n + 1) - 1 / (n + a)). The tail beyond the last term is
    replaced by its midpoint integral, log1p((a - 1) / (N + 3/2)), which is accurate to
    O((a - 1) / N^3).
    """
    terms = DIGAMMA_SERIES_TERMS
    n = np.arange(terms + 1, dtype=np.float64)
    partial = math.fsum(1.0 / (n + 1.0) - 1.0 / (n + a))
    return -euler_gamma() + partial + math.log1p((a - 1.0) / (terms + 1.5))
