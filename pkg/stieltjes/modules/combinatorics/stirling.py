"""Stirling numbers of the first kind.

The exact table holds s(n, k) as Python integers. The scaled table holds t(n, k) = s(n, k) / n!
as binary64 values, built by its own recurrence so that n! is never formed; |t(n, k)| <= 1, so
series code can run to large n without overflow.

Both recurrences are sign-preserving: the two terms on the right-hand side of
s(n+1, k) = s(n, k-1) - n s(n, k) always have the same sign, so the scaled table carries no
cancellation error.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from stieltjes.common.constants import DEFAULT_STIRLING_N_MAX
from stieltjes.common.exceptions import (
    CapacityExceeded,
    DomainError,
    InvalidConfiguration,
    UnsupportedOrder,
)
from stieltjes.modules.combinatorics.rationals import harmonic_exact

STIRLING_LOGGER = logging.getLogger(__name__)


def _exact_rows(n_max: int, columns: int) -> Tuple[Tuple[int, ...], ...]:
    """Build rows 0..n_max of s(n, k) for k < columns."""
    row: List[int] = [0] * columns
    row[0] = 1
    rows = [tuple(row)]
    for n in range(n_max):
        nxt = [-n * row[0]] + [row[k - 1] - n * row[k] for k in range(1, columns)]
        rows.append(tuple(nxt))
        row = nxt
    return tuple(rows)


def _scaled_rows(n_max: int, columns: int) -> np.ndarray:
    """Build rows 0..n_max of t(n, k) = s(n, k) / n! for k < columns."""
    table = np.zeros((n_max + 1, columns), dtype=np.float64)
    table[0, 0] = 1.0
    for n in range(n_max):
        table[n + 1, 0] = -n * table[n, 0] / (n + 1)
        table[n + 1, 1:] = table[n, :-1] / (n + 1) - (n / (n + 1)) * table[n, 1:]
    return table


class StirlingTable:
    """Triangular table of Stirling numbers of the first kind, exact and factorial-scaled.

    Tables are built once and are immutable thereafter, so reads are safe from any thread.

    Arguments
    ---------
    n_max: int
        Largest row held.
    k_max: int, optional
        Largest column held (defaults to n_max). Series code that only needs the first few
        columns of a long table passes this to keep the table narrow.
    exact: bool
        Whether to build the arbitrary-precision table as well as the scaled one. Long tables
        used only for series evaluation are built scaled-only.
    """

    def __init__(
        self,
        n_max: int = DEFAULT_STIRLING_N_MAX,
        k_max: Optional[int] = None,
        exact: bool = True,
    ):
        """Build the table."""
        if not isinstance(n_max, int) or n_max < 0:
            raise InvalidConfiguration(f"n_max must be a non-negative integer, not {n_max!r}")
        if k_max is not None and (not isinstance(k_max, int) or k_max < 0):
            raise InvalidConfiguration(f"k_max must be a non-negative integer, not {k_max!r}")

        self.n_max = n_max
        self.k_max = n_max if k_max is None else min(k_max, n_max)
        columns = self.k_max + 1

        STIRLING_LOGGER.debug(
            "Building Stirling table: n_max=%d, k_max=%d, exact=%s", n_max, self.k_max, exact
        )
        self.exact: Optional[Tuple[Tuple[int, ...], ...]] = (
            _exact_rows(n_max, columns) if exact else None
        )
        self.scaled: np.ndarray = _scaled_rows(n_max, columns)
        self.scaled.setflags(write=False)

    def __repr__(self):
        """Return a representation naming the table's extent."""
        return (
            f"<{self.__class__.__name__}(n_max={self.n_max}, k_max={self.k_max}, "
            f"exact={self.exact is not None})>"
        )

    def _check(self, n: int, k: int) -> bool:
        """Validate (n, k); return False when the cutoff property makes the entry zero."""
        if n < 0 or k < 0:
            raise DomainError("(n, k)", (n, k), "indices must be non-negative")
        if n > self.n_max:
            raise CapacityExceeded(n, self.n_max)
        if k > n:
            return False
        if k > self.k_max:
            raise CapacityExceeded(k, self.k_max, what="k")
        return True

    def exact_value(self, n: int, k: int) -> int:
        """Return s(n, k) exactly."""
        if self.exact is None:
            raise InvalidConfiguration("This Stirling table was built without exact entries")
        if not self._check(n, k):
            return 0
        return self.exact[n][k]

    def scaled_value(self, n: int, k: int) -> float:
        """Return t(n, k) = s(n, k) / n!."""
        if not self._check(n, k):
            return 0.0
        return float(self.scaled[n, k])

    def column(self, k: int, n_stop: int) -> np.ndarray:
        """Return t(n, k) for n = 0..n_stop as a read-only array."""
        if n_stop > self.n_max:
            raise CapacityExceeded(n_stop, self.n_max)
        if k > self.k_max:
            raise CapacityExceeded(k, self.k_max, what="k")
        return self.scaled[: n_stop + 1, k]


@lru_cache(maxsize=16)
def stirling_table(
    n_max: int = DEFAULT_STIRLING_N_MAX, k_max: Optional[int] = None, exact: bool = True
) -> StirlingTable:
    """Return a shared, immutable table of the requested extent."""
    return StirlingTable(n_max=n_max, k_max=k_max, exact=exact)


def stirling_closed_form(m: int, k: int) -> int:
    """Evaluate s(m, k) for k <= 4 through harmonic and generalized harmonic numbers.

    With n = m - 1:
        s(n+1, 1) = (-1)^n n!
        s(n+1, 2) = (-1)^(n+1) n! H_n
        s(n+1, 3) = (-1)^n (n!/2) [H_n^2 - H_n^(2)]
        s(n+1, 4) = (-1)^(n+1) (n!/6) [H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3)]
    """
    if k not in (1, 2, 3, 4):
        raise UnsupportedOrder(k, "closed forms exist for k in 1..4")
    if m < 1:
        raise DomainError("m", m, "must be at least 1")

    n = m - 1
    sign = -1 if n % 2 else 1
    factorial = math.factorial(n)
    h1 = harmonic_exact(n, 1)

    if k == 1:
        value = Fraction(sign * factorial)
    elif k == 2:
        value = -sign * factorial * h1
    elif k == 3:
        h2 = harmonic_exact(n, 2)
        value = sign * Fraction(factorial, 2) * (h1**2 - h2)
    else:
        h2 = harmonic_exact(n, 2)
        h3 = harmonic_exact(n, 3)
        value = -sign * Fraction(factorial, 6) * (h1**3 - 3 * h1 * h2 + 2 * h3)

    # The closed forms are integers; anything else means the arithmetic above is wrong
    if value.denominator != 1:
        raise ArithmeticError(f"Closed form for s({m}, {k}) is not an integer: {value}")
    return value.numerator
