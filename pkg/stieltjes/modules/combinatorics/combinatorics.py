"""Stieltjes toolkit: combinatorics module.

Exact and scaled Stirling numbers of the first kind, harmonic numbers, and the Stirling
generating function used as a consistency check on the scaled table.
"""

import math
from typing import Tuple

import numpy as np

from stieltjes.common.constants import DEFAULT_STIRLING_N_MAX
from stieltjes.common.decorators import index_check
from stieltjes.common.exceptions import DomainError, ExcludedPoint
from stieltjes.common.module import ModuleMapper, ToolkitModule
from stieltjes.modules.combinatorics.rationals import HarmonicValue
from stieltjes.modules.combinatorics.rationals import harmonic as harmonic_value
from stieltjes.modules.combinatorics.stirling import (
    StirlingTable,
    stirling_closed_form,
    stirling_table,
)


class CombinatoricsModule(ToolkitModule):
    """The CombinatoricsModule owns the toolkit's Stirling table and harmonic numbers."""

    name = "Stieltjes Toolkit Combinatorics Module"
    help = "Stirling numbers of the first kind, harmonic numbers and generating functions"

    def __init__(self, mapper: ModuleMapper, n_max: int = DEFAULT_STIRLING_N_MAX):
        """Construct an instance of the CombinatoricsModule class."""
        super().__init__(mapper)

        self.logger.debug("Building the Stirling table up to n=%d", n_max)
        self.table: StirlingTable = stirling_table(n_max)

    @property
    def n_max(self) -> int:
        """Return the largest row of the configured Stirling table."""
        return self.table.n_max

    def stirling_exact(self, n: int, k: int) -> int:
        """Return s(n, k) exactly.

        Raises CapacityExceeded when n is beyond the configured table.
        """
        return self.table.exact_value(n, k)

    def stirling_scaled(self, n: int, k: int) -> float:
        """Return s(n, k) / n! from the scaled table."""
        return self.table.scaled_value(n, k)

    def stirling_closed_form(self, m: int, k: int) -> int:
        """Return s(m, k), k in 1..4, from its harmonic-number closed form."""
        return stirling_closed_form(m, k)

    def harmonic(self, n: int, r: int = 1) -> HarmonicValue:
        """Return the generalized harmonic number H_n^(r)."""
        return harmonic_value(n, r)

    @index_check("k", minimum=1)
    @index_check("N", minimum=1)
    def gf_partial(self, x: float, k: int, N: int) -> Tuple[float, float]:
        """Evaluate the Stirling generating function against its closed form.

        Returns the pair (sum_{n=0..N} s(n, k) x^n / n!, ln^k(1 + x) / k!). The partial sums
        converge to the target for x in (-1, 1]; x = 1 converges slowly, like an alternating
        series.
        """
        if x == -1:
            raise ExcludedPoint("x", x)
        if not -1 < x <= 1:
            raise DomainError("x", x, "must lie in (-1, 1]")

        if N <= self.table.n_max:
            table = self.table
        else:
            self.logger.debug("Building a scaled-only table to n=%d for column %d", N, k)
            table = stirling_table(N, k_max=k, exact=False)

        column = table.column(k, N)
        powers = np.power(float(x), np.arange(N + 1, dtype=np.float64))
        partial = math.fsum(column * powers)
        target = math.log1p(x) ** k / math.factorial(k)

        self.logger.debug("gf_partial(x=%s, k=%d, N=%d) = %r vs %r", x, k, N, partial, target)
        return partial, target
