"""Unit tests for CombinatoricsModule"""

import math
from fractions import Fraction

import pytest

from stieltjes import Toolkit
from stieltjes.common.exceptions import (
    CapacityExceeded,
    DomainError,
    ExcludedPoint,
    InvalidConfiguration,
    UnsupportedOrder,
)
from stieltjes.modules.combinatorics import (
    StirlingTable,
    bernoulli_even,
    harmonic,
    stirling_closed_form,
    stirling_table,
)


@pytest.fixture(name="toolkit", scope="module")
def fixture_toolkit():
    """Build one toolkit for the whole module."""
    return Toolkit()


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (0, 0, 1),
        (3, 1, 2),
        (4, 1, -6),
        (4, 2, 11),
        (5, 2, -50),
        (5, 3, 35),
        (6, 6, 1),
    ],
)
def test_stirling_exact(toolkit: Toolkit, n, k, expected):
    """Signed Stirling numbers of the first kind at known entries"""
    assert toolkit.combinatorics.stirling_exact(n, k) == expected


def test_stirling_exact__cutoff(toolkit: Toolkit):
    """Entries with k > n are zero, in both tables"""
    assert toolkit.combinatorics.stirling_exact(3, 7) == 0
    assert toolkit.combinatorics.stirling_scaled(3, 7) == 0.0


def test_stirling_exact__capacity(toolkit: Toolkit):
    """Rows beyond the configured table are refused"""
    with pytest.raises(CapacityExceeded):
        toolkit.combinatorics.stirling_exact(toolkit.combinatorics.n_max + 1, 1)


def test_stirling_exact__negative_index(toolkit: Toolkit):
    """Negative indices are a domain error"""
    with pytest.raises(DomainError):
        toolkit.combinatorics.stirling_exact(-1, 0)


def test_stirling_closed_form(toolkit: Toolkit):
    """The harmonic-number closed forms reproduce the recurrence exactly"""
    for m in range(1, 21):
        for k in range(1, 5):
            assert toolkit.combinatorics.stirling_closed_form(m, k) == (
                toolkit.combinatorics.stirling_exact(m, k)
            )


def test_stirling_closed_form__unsupported():
    """Closed forms stop at k = 4"""
    with pytest.raises(UnsupportedOrder):
        stirling_closed_form(10, 5)


def test_stirling_row_sums(toolkit: Toolkit):
    """The unsigned numbers in row n count all permutations of n elements"""
    for n in range(21):
        row = [abs(toolkit.combinatorics.stirling_exact(n, k)) for k in range(n + 1)]
        assert sum(row) == math.factorial(n)


def test_stirling_scaled(toolkit: Toolkit):
    """The scaled table agrees with the exact table divided by n!"""
    for n in (1, 10, 25, 60, 128):
        for k in (1, 2, 5, 11):
            exact = Fraction(toolkit.combinatorics.stirling_exact(n, k), math.factorial(n))
            scaled = toolkit.combinatorics.stirling_scaled(n, k)
            assert scaled == pytest.approx(float(exact), rel=1e-13, abs=1e-300)


def test_stirling_table__scaled_only():
    """A scaled-only table refuses exact reads but serves its columns"""
    table = StirlingTable(n_max=500, k_max=3, exact=False)
    assert table.column(1, 500)[500] == pytest.approx(-1.0 / 500)
    with pytest.raises(InvalidConfiguration):
        table.exact_value(3, 1)
    with pytest.raises(CapacityExceeded):
        table.column(4, 10)


def test_stirling_table__shared():
    """The factory hands out one shared table per extent"""
    assert stirling_table(64) is stirling_table(64)


def test_stirling_table__read_only():
    """The scaled table cannot be written to"""
    table = stirling_table(16)
    with pytest.raises(ValueError):
        table.scaled[1, 1] = 2.0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gf_partial(toolkit: Toolkit, k):
    """The generating function converges geometrically inside the unit disc"""
    partial, target = toolkit.combinatorics.gf_partial(0.5, k, 60)
    assert target == pytest.approx(math.log(1.5) ** k / math.factorial(k), rel=1e-15)
    assert abs(partial - target) <= 1e-12


def test_gf_partial__boundary(toolkit: Toolkit):
    """At x = 1 the series converges slowly, beyond the exact table"""
    partial, target = toolkit.combinatorics.gf_partial(1.0, 2, 2000)
    assert abs(partial - target) <= 3e-3


def test_gf_partial__excluded_point(toolkit: Toolkit):
    """x = -1 is the logarithmic singularity"""
    with pytest.raises(ExcludedPoint):
        toolkit.combinatorics.gf_partial(-1.0, 1, 10)


@pytest.mark.parametrize("x", [-1.5, 1.01, 2.0])
def test_gf_partial__domain(toolkit: Toolkit, x):
    """Points outside (-1, 1] are refused"""
    with pytest.raises(DomainError):
        toolkit.combinatorics.gf_partial(x, 1, 10)


def test_harmonic(toolkit: Toolkit):
    """Generalized harmonic numbers are exact fractions"""
    assert toolkit.combinatorics.harmonic(3, 2).exact == Fraction(49, 36)
    assert harmonic(4).exact == Fraction(25, 12)
    assert float(harmonic(0, 3)) == 0.0


def test_harmonic__large_n(toolkit: Toolkit):
    """Thousands of terms are summed without exhausting the stack"""
    n = 3001
    euler_gamma = 0.5772156649015329
    expected = math.log(n) + euler_gamma + 1 / (2 * n) - 1 / (12 * n**2)
    assert toolkit.combinatorics.harmonic(n, 1).value == pytest.approx(expected, rel=1e-14)
    tail = 1 / n - 1 / (2 * n**2)
    assert harmonic(n, 2).value == pytest.approx(math.pi**2 / 6 - tail, rel=1e-11)


def test_harmonic__domain():
    """r must be positive"""
    with pytest.raises(DomainError):
        harmonic(3, 0)


@pytest.mark.parametrize(
    "n,expected",
    [
        (2, Fraction(1, 6)),
        (4, Fraction(-1, 30)),
        (6, Fraction(1, 42)),
        (12, Fraction(-691, 2730)),
        (16, Fraction(-3617, 510)),
    ],
)
def test_bernoulli_even(n, expected):
    """Even Bernoulli numbers"""
    assert bernoulli_even(n) == expected


def test_bernoulli_even__domain():
    """Odd and out-of-range indices are refused"""
    with pytest.raises(DomainError):
        bernoulli_even(3)
    with pytest.raises(DomainError):
        bernoulli_even(18)
