"""Exact rational sequences: harmonic numbers and even Bernoulli numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from stieltjes.common.exceptions import DomainError


@dataclass(frozen=True)
class HarmonicValue:
    """The generalized harmonic number H_n^(r), exactly and as a binary64 rendering."""

    n: int
    r: int
    exact: Fraction

    @property
    def value(self) -> float:
        """Return the nearest binary64 value."""
        return float(self.exact)

    def __float__(self):
        """Return the nearest binary64 value."""
        return self.value


@lru_cache(maxsize=1024)
def harmonic_exact(n: int, r: int = 1) -> Fraction:
    """Return H_n^(r) = sum_{j=1..n} 1/j^r as an exact fraction."""
    if n < 0:
        raise DomainError("n", n, "must be non-negative")
    if r < 1:
        raise DomainError("r", r, "must be a positive integer")
    return sum((Fraction(1, j**r) for j in range(1, n + 1)), Fraction(0))


def harmonic(n: int, r: int = 1) -> HarmonicValue:
    """Return H_n^(r) wrapped with its float rendering."""
    return HarmonicValue(n=n, r=r, exact=harmonic_exact(n, r))


@lru_cache(maxsize=None)
def _bernoulli_numbers(count: int) -> Tuple[Fraction, ...]:
    """Return B_0..B_count by the Akiyama-Tanigawa algorithm (B_1 = +1/2 convention)."""
    numbers = []
    row = []
    for m in range(count + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        numbers.append(row[0])
    return tuple(numbers)


def bernoulli_even(n: int) -> Fraction:
    """Return the even Bernoulli number B_n, n in 2, 4, ..., 16."""
    if n % 2 or not 2 <= n <= 16:
        raise DomainError("n", n, "must be an even integer in 2..16")
    return _bernoulli_numbers(16)[n]
