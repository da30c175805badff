"""Unit tests for DerivedIdentitiesModule"""

import logging
import math
from fractions import Fraction

import mpmath
import pytest

from stieltjes import Toolkit
from stieltjes.common.constants import METHOD_TARGET, MethodSelector
from stieltjes.common.exceptions import (
    DomainError,
    OutOfBudget,
    UnknownMethod,
    UnsupportedOrder,
)
from stieltjes.modules.derived_identities import HarmonicCheck, method_supports

EULER_GAMMA = 0.5772156649015329
GAMMA_1 = -0.0728158454836767
ZETA_2 = math.pi**2 / 6.0
ZETA_3 = 1.2020569031595942


@pytest.fixture(name="toolkit", scope="module")
def fixture_toolkit():
    """Build one toolkit for the whole module."""
    return Toolkit()


def test_gamma_shift__euler(toolkit: Toolkit):
    """gamma_0(2) = gamma - 1"""
    result = toolkit.derived.gamma_shift(0, 1.0, 1)
    base = toolkit.oracle.gamma_limit_oracle(0, 1.0)
    assert result.value == pytest.approx(EULER_GAMMA - 1.0, abs=1e-8)
    assert result.method == MethodSelector.ORACLE
    assert result.diagnostics["shift"] == 1
    assert result.work == base.work + 1


def test_gamma_shift__log_vanishes(toolkit: Toolkit):
    """ln 1 = 0 leaves gamma_1 unchanged"""
    result = toolkit.derived.gamma_shift(1, 1.0, 1)
    assert result.value == toolkit.oracle.gamma_limit_oracle(1, 1.0).value


def test_gamma_shift__half(toolkit: Toolkit):
    """gamma_2(3/2) = gamma_2(1/2) - 2 ln^2 2, against the oracle at 3/2"""
    result = toolkit.derived.gamma_shift(2, 0.5, 1)
    direct = toolkit.oracle.gamma_limit_oracle(2, 1.5)
    base = toolkit.oracle.gamma_limit_oracle(2, 0.5)
    assert result.value == pytest.approx(base.value - 2.0 * math.log(2.0) ** 2, abs=1e-14)
    assert abs(result.value - direct.value) <= 1e-8


@pytest.mark.parametrize("k", range(5))
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", [0.5, 1.0])
def test_gamma_shift__hermite(toolkit: Toolkit, k, n, a):
    """Shifting a Hermite value agrees with the Hermite value at the shifted point"""
    shifted = toolkit.derived.gamma_shift(k, a, n, MethodSelector.HERMITE)
    direct = toolkit.derived.gamma(k, a + n, "hermite")
    assert shifted.method == MethodSelector.HERMITE
    assert abs(shifted.value - direct.value) <= 2 * METHOD_TARGET * max(1.0, abs(direct.value))


def test_gamma_shift__invalid(toolkit: Toolkit):
    """The shift must be a positive integer"""
    with pytest.raises(DomainError):
        toolkit.derived.gamma_shift(0, 1.0, 0)


@pytest.mark.parametrize("ell", [0, 1, 3])
def test_gamma_diff__identical(toolkit: Toolkit, ell):
    """Identical arguments cancel exactly"""
    result = toolkit.derived.gamma_diff(ell, 0.75, 0.75, 50)
    assert result.value == 0.0
    assert result.err_estimate == 0.0


def test_gamma_diff__digamma(toolkit: Toolkit):
    """gamma_0(1) - gamma_0(1/2) = psi(1/2) - psi(1) = -2 ln 2"""
    result = toolkit.derived.gamma_diff(0, 1.0, 0.5, 1000)
    assert result.value == pytest.approx(-2.0 * math.log(2.0), abs=1e-8)
    assert result.err_estimate == pytest.approx(0.5 / 1000**2)
    assert result.work == 2 * 1001


def test_gamma_diff__shift(toolkit: Toolkit):
    """gamma_1(1) - gamma_1(2) = ln 1 = 0"""
    result = toolkit.derived.gamma_diff(1, 1.0, 2.0, 10**6)
    assert abs(result.value) <= 1e-10


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_gamma_diff__oracle(toolkit: Toolkit, ell):
    """Differences agree with differences of oracle values"""
    result = toolkit.derived.gamma_diff(ell, 0.5, 1.5, 10**6)
    expected = (
        toolkit.oracle.gamma_limit_oracle(ell, 0.5).value
        - toolkit.oracle.gamma_limit_oracle(ell, 1.5).value
    )
    assert abs(result.value - expected) <= 1e-6
    # The shift identity gives this difference in closed form
    assert result.value == pytest.approx(math.log(0.5) ** ell / 0.5, abs=1e-10)


def test_gamma_diff__mpmath(toolkit: Toolkit):
    """An unrelated pair of arguments against an independent reference"""
    result = toolkit.derived.gamma_diff(1, 0.3, 2.7, 10**5)
    expected = float(mpmath.stieltjes(1, 0.3) - mpmath.stieltjes(1, 2.7))
    assert abs(result.value - expected) <= 1e-8


def test_gamma_diff__single_term(toolkit: Toolkit):
    """One term is never reported as converged, and its estimate covers the true error"""
    result = toolkit.derived.gamma_diff(1, 0.5, 3.0, 1)
    expected = float(mpmath.stieltjes(1, 0.5) - mpmath.stieltjes(1, 3.0))
    assert result.converged is False
    assert result.err_estimate > 0.0
    assert abs(result.value - expected) <= result.err_estimate


def test_gamma_diff__estimate_shrinks(toolkit: Toolkit):
    """The error estimate falls as N grows and bounds the error against the reference"""
    expected = float(mpmath.stieltjes(2, 0.5) - mpmath.stieltjes(2, 3.0))
    previous = math.inf
    for N in (4, 64, 1024):
        result = toolkit.derived.gamma_diff(2, 0.5, 3.0, N)
        assert result.err_estimate < previous
        assert abs(result.value - expected) <= result.err_estimate
        previous = result.err_estimate


def test_gamma_diff__invalid(toolkit: Toolkit):
    """Arguments are validated"""
    with pytest.raises(DomainError):
        toolkit.derived.gamma_diff(0, 0.0, 1.0, 10)
    with pytest.raises(DomainError):
        toolkit.derived.gamma_diff(0, 1.0, 2.0, 0)
    with pytest.raises(DomainError):
        toolkit.derived.gamma_diff(-1, 1.0, 2.0, 10)


@pytest.mark.parametrize(
    "n,a,expected",
    [(1, 1.0, ZETA_2), (1, 2.0, ZETA_2 - 1.0), (2, 1.0, -2.0 * ZETA_3)],
)
def test_polygamma(toolkit: Toolkit, n, a, expected):
    """Polygamma values from the Hurwitz zeta relation"""
    assert abs(toolkit.derived.polygamma(n, a) - expected) <= 1e-12


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", [0.5, 3.25])
def test_polygamma__mpmath(toolkit: Toolkit, n, a):
    """Polygamma values against an independent reference"""
    expected = float(mpmath.psi(n, a))
    assert toolkit.derived.polygamma(n, a) == pytest.approx(expected, rel=1e-12)


def test_polygamma__digamma(toolkit: Toolkit):
    """n = 0 is -gamma_0 from the selected method"""
    assert toolkit.derived.polygamma(0, 1.0) == pytest.approx(-EULER_GAMMA, abs=1e-8)
    assert toolkit.derived.polygamma(0, 1.0, "hermite") == pytest.approx(-EULER_GAMMA, abs=1e-11)
    assert toolkit.derived.polygamma(0, 10.0, "asymptotic") == pytest.approx(
        -2.2517525890667211, abs=1e-11
    )


def test_polygamma__invalid(toolkit: Toolkit):
    """Negative orders and non-positive arguments are refused"""
    with pytest.raises(DomainError):
        toolkit.derived.polygamma(-1, 1.0)
    with pytest.raises(DomainError):
        toolkit.derived.polygamma(1, -2.0)


def test_gen_harmonic_check__squares(toolkit: Toolkit):
    """H_3^(2) = 1 + 1/4 + 1/9"""
    exact, via_polygamma, via_integral = toolkit.derived.gen_harmonic_check(3, 2)
    assert exact == Fraction(49, 36)
    assert via_polygamma == pytest.approx(49 / 36, abs=1e-10)
    assert via_integral == pytest.approx(49 / 36, abs=1e-10)


def test_gen_harmonic_check__empty(toolkit: Toolkit):
    """H_0^(r) is the empty sum"""
    for r in range(1, 5):
        exact, via_polygamma, via_integral = toolkit.derived.gen_harmonic_check(0, r)
        assert exact == 0
        assert via_polygamma == pytest.approx(0.0, abs=1e-12)
        assert via_integral == pytest.approx(0.0, abs=1e-12)


def test_gen_harmonic_check__harmonic(toolkit: Toolkit):
    """H_3 = 11/6; the integrand tends to n at t = 1"""
    check = toolkit.derived.gen_harmonic_check(3, 1)
    assert check.exact == Fraction(11, 6)
    assert check.integral_converged
    assert check.max_deviation <= 1e-10


@pytest.mark.parametrize("n", range(21))
@pytest.mark.parametrize("r", range(1, 5))
def test_gen_harmonic_check__grid(toolkit: Toolkit, n, r):
    """The three routes agree"""
    check = toolkit.derived.gen_harmonic_check(n, r)
    assert (check.n, check.r) == (n, r)
    assert check.integral_converged
    assert check.max_deviation <= 1e-9


def test_gen_harmonic_check__invalid(toolkit: Toolkit):
    """r starts at 1"""
    with pytest.raises(DomainError):
        toolkit.derived.gen_harmonic_check(3, 0)


def test_harmonic_check__max_deviation():
    """The worst of the two floating-point routes is reported"""
    check = HarmonicCheck(
        n=1,
        r=1,
        exact=Fraction(1),
        via_polygamma=1.0 + 1e-12,
        via_integral=1.0 - 3e-12,
        integral_err=1e-13,
        integral_converged=True,
    )
    assert check.max_deviation == pytest.approx(3e-12, rel=1e-3)
    assert list(check) == [Fraction(1), 1.0 + 1e-12, 1.0 - 3e-12]


def test_zero_sum_rhs__order_two(toolkit: Toolkit):
    """1 - pi^2/8 + 2 gamma_1 + gamma^2 from oracle constants"""
    assert toolkit.derived.zero_sum_rhs(2) == pytest.approx(-0.0461543173, abs=2e-7)


def test_zero_sum_rhs__order_three(toolkit: Toolkit):
    """The order 3 combination nearly cancels"""
    assert toolkit.derived.zero_sum_rhs(3) == pytest.approx(-1.1116e-4, abs=2e-6)


@pytest.mark.parametrize("order", [2, 3])
@pytest.mark.parametrize("method", ["hermite", "u_integral"])
def test_zero_sum_rhs__methods(toolkit: Toolkit, order, method):
    """The right-hand side does not depend on where the constants come from"""
    reference = toolkit.derived.zero_sum_rhs(order)
    assert abs(toolkit.derived.zero_sum_rhs(order, method) - reference) <= 1e-7


@pytest.mark.parametrize("order", [1, 4])
def test_zero_sum_rhs__unsupported_order(toolkit: Toolkit, order):
    """Only orders 2 and 3 have a closed form"""
    with pytest.raises(UnsupportedOrder):
        toolkit.derived.zero_sum_rhs(order)


def test_zero_sum_rhs__unsupported_method(toolkit: Toolkit):
    """The asymptotic method has no gamma_1"""
    with pytest.raises(UnsupportedOrder):
        toolkit.derived.zero_sum_rhs(2, MethodSelector.ASYMPTOTIC)


@pytest.mark.parametrize(
    "method,k,expected",
    [
        ("hermite", 50, True),
        ("u_integral", 7, True),
        ("stirling", 1, True),
        ("stirling", 2, False),
        ("asymptotic", 0, True),
        ("asymptotic", 1, False),
        ("oracle", 8, True),
        ("oracle", 9, False),
    ],
)
def test_method_supports(toolkit: Toolkit, method, k, expected):
    """Applicability of each method"""
    assert method_supports(method, k) is expected
    assert toolkit.derived.supports(MethodSelector.parse(method), k) is expected


def test_gamma__dispatch(toolkit: Toolkit):
    """Each tag reaches its producer"""
    for method in ("hermite", "u_integral", "stirling", "asymptotic", "oracle"):
        result = toolkit.derived.gamma(0, 2.0, method)
        assert result.method == MethodSelector.parse(method)


def test_gamma__unsupported(toolkit: Toolkit):
    """Methods refuse orders they have no representation for"""
    with pytest.raises(UnsupportedOrder):
        toolkit.derived.gamma(2, 1.0, "stirling")
    with pytest.raises(UnsupportedOrder):
        toolkit.derived.gamma(1, 1.0, "asymptotic")


def test_gamma__unknown_method(toolkit: Toolkit):
    """Unknown tags are refused"""
    with pytest.raises(UnknownMethod):
        toolkit.derived.gamma(0, 1.0, "euler_maclaurin")


def test_gamma__provenance(toolkit: Toolkit, caplog):
    """A failing producer is named in the log and its error propagates unchanged"""
    caplog.set_level(logging.ERROR)
    with pytest.raises(OutOfBudget):
        toolkit.derived.gamma(9, 1.0, "oracle")
    assert "The oracle method failed for gamma_9(1.0)" in caplog.text
