"""Unit tests for IntegralRepsModule"""

import math

import mpmath
import numpy as np
import pytest

from stieltjes import QuadratureSpec, StieltjesQuery, Toolkit
from stieltjes.common.constants import MethodSelector
from stieltjes.common.exceptions import DomainError, UnsupportedOrder
from stieltjes.modules.integral_reps import (
    gamma0_integrand_limit,
    gamma_m_integrand_limit,
    hermite_integrand_limit,
)
from stieltjes.modules.integral_reps.integrands import (
    gamma0_numerator,
    gamma_m_numerator,
    hermite_integrand,
)

A_GRID = [0.5, 1.0, 1.5, 2.0, 10.0]


@pytest.fixture(name="toolkit", scope="module")
def fixture_toolkit():
    """Build one toolkit for the whole module."""
    return Toolkit()


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
@pytest.mark.parametrize("a", A_GRID)
def test_gamma_hermite__oracle(toolkit: Toolkit, k, a):
    """The Hermite-type integral agrees with the limit-relation oracle"""
    result = toolkit.integral_reps.gamma_hermite(StieltjesQuery(k, a))
    oracle = toolkit.oracle.gamma_limit_oracle(k, a)
    assert result.method == MethodSelector.HERMITE
    assert result.converged
    assert abs(result.value - oracle.value) <= max(1e-7, 10 * oracle.err_estimate)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("a", [0.5, 1.0, 10.0])
def test_gamma_hermite__mpmath(toolkit: Toolkit, k, a):
    """The Hermite-type integral agrees with mpmath"""
    result = toolkit.integral_reps.gamma_hermite(StieltjesQuery(k, a))
    assert result.value == pytest.approx(float(mpmath.stieltjes(k, a)), abs=1e-10)


@pytest.mark.parametrize(
    "k,expected",
    [(0, 0.5772156649015329), (1, -0.0728158454836767), (2, -0.0096903631928723)],
)
def test_gamma_hermite__constants(toolkit: Toolkit, k, expected):
    """The Stieltjes constants at a = 1"""
    result = toolkit.integral_reps.gamma_hermite(StieltjesQuery(k, 1.0))
    assert abs(result.value - expected) <= 1e-8


@pytest.mark.parametrize("a", A_GRID)
def test_gamma0_u_integral(toolkit: Toolkit, a):
    """The unit-interval integral for gamma_0 agrees with the Hermite-type integral"""
    result = toolkit.integral_reps.gamma0_u_integral(a)
    hermite = toolkit.integral_reps.gamma_hermite(StieltjesQuery(0, a))
    assert result.method == MethodSelector.U_INTEGRAL
    assert result.converged
    assert abs(result.value - hermite.value) <= 1e-9


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("a", A_GRID)
def test_gamma_m_u_integral(toolkit: Toolkit, m, a):
    """The unit-interval integral for gamma_m agrees with the Hermite-type integral"""
    q = StieltjesQuery(m, a)
    result = toolkit.integral_reps.gamma_m_u_integral(q)
    hermite = toolkit.integral_reps.gamma_hermite(q)
    assert result.converged
    assert abs(result.value - hermite.value) <= 1e-9


def test_gamma_m_u_integral__order_zero(toolkit: Toolkit):
    """m = 0 has its own formula"""
    with pytest.raises(UnsupportedOrder):
        toolkit.integral_reps.gamma_m_u_integral(StieltjesQuery(0, 1.0))


def test_gamma0_u_integral__domain(toolkit: Toolkit):
    """a must be positive"""
    with pytest.raises(DomainError):
        toolkit.integral_reps.gamma0_u_integral(-1.0)
    with pytest.raises(DomainError):
        StieltjesQuery(1, 0.0)


@pytest.mark.parametrize("a", [math.inf, math.nan, -math.inf])
def test_stieltjes_query__not_finite(toolkit: Toolkit, a):
    """Queries refuse the same non-finite parameters as the scalar entry points"""
    with pytest.raises(DomainError):
        StieltjesQuery(0, a)
    with pytest.raises(DomainError):
        toolkit.integral_reps.gamma0_u_integral(a)


@pytest.mark.parametrize("k", [0, 2])
def test_gamma_hermite__literal(toolkit: Toolkit, k):
    """The complex transcription has a vanishing imaginary part and the same value"""
    q = StieltjesQuery(k, 1.5)
    literal = toolkit.integral_reps.gamma_hermite(q, literal=True)
    reduced = toolkit.integral_reps.gamma_hermite(q)
    assert abs(literal.diagnostics["imaginary_part"]) <= 1e-12
    assert literal.value == pytest.approx(reduced.value, abs=1e-12)


def test_gamma0_u_integral__literal(toolkit: Toolkit):
    """The complex transcription of the gamma_0 integral"""
    literal = toolkit.integral_reps.gamma0_u_integral(2.0, literal=True)
    reduced = toolkit.integral_reps.gamma0_u_integral(2.0)
    assert abs(literal.diagnostics["imaginary_part"]) <= 1e-12
    assert literal.value == pytest.approx(reduced.value, abs=1e-12)


def test_gamma_m_u_integral__literal(toolkit: Toolkit):
    """The complex transcription of the gamma_m integral"""
    q = StieltjesQuery(3, 0.5)
    literal = toolkit.integral_reps.gamma_m_u_integral(q, literal=True)
    reduced = toolkit.integral_reps.gamma_m_u_integral(q)
    assert abs(literal.diagnostics["imaginary_part"]) <= 1e-12
    assert literal.value == pytest.approx(reduced.value, abs=1e-12)


def test_gamma_hermite__not_converged(toolkit: Toolkit):
    """A quadrature that runs out of panels is reported, not raised"""
    result = toolkit.integral_reps.gamma_hermite(
        StieltjesQuery(1, 1.0), spec=QuadratureSpec(max_panels=1)
    )
    assert not result.converged


@pytest.mark.parametrize("k", [0, 1, 3])
@pytest.mark.parametrize("a", [0.5, 2.0])
def test_hermite_integrand_limit(k, a):
    """The supplied limit matches the integrand just off the endpoint"""
    near = hermite_integrand(k, a)(np.array([1e-7]))[0]
    assert near == pytest.approx(hermite_integrand_limit(k, a), rel=1e-5, abs=1e-12)


@pytest.mark.parametrize("a", [0.5, 2.0])
def test_gamma0_integrand_limit(a):
    """The gamma_0 numerator over expm1(v) tends to 1 / (2 pi^2 a^2)"""
    v = 1e-7
    near = gamma0_numerator(a)(np.array([-v]))[0] / np.expm1(v)
    assert near == pytest.approx(gamma0_integrand_limit(a), rel=1e-5)


@pytest.mark.parametrize("m", [1, 2, 4])
@pytest.mark.parametrize("a", [0.5, 2.0])
def test_gamma_m_integrand_limit(m, a):
    """The gamma_m numerator over expm1(v) tends to the supplied limit"""
    v = 1e-7
    near = gamma_m_numerator(m, a)(np.array([-v]))[0] / np.expm1(v)
    assert near == pytest.approx(gamma_m_integrand_limit(m, a), rel=1e-5, abs=1e-12)
