"""Unit tests for QuadratureModule"""

import math

import mpmath
import numpy as np
import pytest

from stieltjes import QuadratureSpec, Toolkit
from stieltjes.common.exceptions import InvalidConfiguration, QuadratureError
from stieltjes.modules.quadrature import gauss_legendre


@pytest.fixture(name="toolkit", scope="module")
def fixture_toolkit():
    """Build one toolkit for the whole module."""
    return Toolkit()


def test_gauss_legendre():
    """Rules integrate constants exactly and are shared read-only arrays"""
    nodes, weights = gauss_legendre(16)
    assert math.fsum(weights) == pytest.approx(2.0, abs=1e-14)
    assert np.all(np.abs(nodes) < 1.0)
    assert gauss_legendre(16)[0] is nodes
    with pytest.raises(ValueError):
        weights[0] = 0.0


def test_integrate_boltzmann_tail(toolkit: Toolkit):
    """The damping factor on its own integrates to 1 / (2 pi)"""
    result = toolkit.quadrature.integrate_boltzmann_tail(lambda y: np.exp(-2.0 * math.pi * y))
    assert result.converged
    assert result.value == pytest.approx(1.0 / (2.0 * math.pi), abs=1e-14)
    assert result.err_estimate <= 1e-12
    assert result.nodes_used > 0
    assert len(result.levels) >= 2


def test_integrate_boltzmann_tail__bose_integral(toolkit: Toolkit):
    """int_0^inf y / (exp(2 pi y) - 1) dy = 1/24"""
    result = toolkit.quadrature.integrate_boltzmann_tail(
        lambda y: y / np.expm1(2.0 * math.pi * y), at_zero=1.0 / (2.0 * math.pi)
    )
    assert result.converged
    assert result.value == pytest.approx(1.0 / 24.0, abs=1e-14)


@pytest.mark.parametrize("j", [1, 2, 3, 4, 5, 6])
def test_integrate_unit_log__model_family(toolkit: Toolkit, j):
    """int_0^1 ln^j(1 - u) / u du = (-1)^j j! zeta(j + 1)"""
    result = toolkit.quadrature.integrate_unit_log(lambda log_u: log_u**j, at_zero=0.0)
    expected = (-1) ** j * math.factorial(j) * float(mpmath.zeta(j + 1))
    assert result.converged
    assert result.value == pytest.approx(expected, rel=1e-10)


def test_integrate_unit_log__third_member(toolkit: Toolkit):
    """The j = 3 member of the model family"""
    result = toolkit.quadrature.integrate_unit_log(lambda log_u: log_u**3, at_zero=0.0)
    assert result.value == pytest.approx(-6.4939394023, abs=1e-9)


def test_integrate_unit_log__polynomial(toolkit: Toolkit):
    """int_0^1 (1 - (1 - u)^3) / u du = 1 + 1/2 + 1/3"""
    result = toolkit.quadrature.integrate_unit_log(
        lambda log_u: -np.expm1(3.0 * log_u), at_zero=3.0
    )
    assert result.value == pytest.approx(11.0 / 6.0, abs=1e-12)


def test_integrate__zero_integrand(toolkit: Toolkit):
    """f = 0 integrates to exactly 0 on both families"""
    tail = toolkit.quadrature.integrate_boltzmann_tail(np.zeros_like)
    unit = toolkit.quadrature.integrate_unit_log(np.zeros_like)
    for result in (tail, unit):
        assert result.value == 0.0
        assert result.err_estimate == 0.0
        assert result.converged


def test_integrate_boltzmann_tail__cubic_moment(toolkit: Toolkit):
    """int_0^inf y^3 / (exp(2 pi y) - 1) dy = 3! zeta(4) / (2 pi)^4 = 1/240"""
    result = toolkit.quadrature.integrate_boltzmann_tail(
        lambda y: y**3 / np.expm1(2.0 * math.pi * y)
    )
    assert result.converged
    assert result.value == pytest.approx(1.0 / 240.0, abs=1e-14)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_integrate_unit_log__refinement(toolkit: Toolkit, j):
    """The error estimate falls as the points per panel double, down to rounding noise"""
    estimates = []
    for points in (4, 8, 16, 32):
        spec = QuadratureSpec(points_per_panel=points, refinements=1)
        result = toolkit.quadrature.integrate_unit_log(lambda log_u: log_u**j, spec=spec)
        estimates.append(result.err_estimate)

    noise_floor = 1e-13 * math.factorial(j)
    assert estimates[1] < estimates[0]
    for coarse, fine in zip(estimates, estimates[1:]):
        assert fine <= max(coarse, noise_floor)


def test_integrate__linearity(toolkit: Toolkit):
    """Integrals of linear combinations are the combinations of the integrals"""
    alpha, beta = 2.5, -0.75
    tol = toolkit.quadrature.spec.tol

    def damping(y):
        return np.exp(-2.0 * math.pi * y)

    def bose(y):
        return y / np.expm1(2.0 * math.pi * y)

    tail = toolkit.quadrature.integrate_boltzmann_tail
    combined = tail(lambda y: alpha * damping(y) + beta * bose(y)).value
    separate = alpha * tail(damping).value + beta * tail(bose).value
    assert abs(combined - separate) <= 2.0 * tol

    unit = toolkit.quadrature.integrate_unit_log
    combined = unit(lambda log_u: alpha * log_u**2 + beta * log_u**3).value
    separate = (
        alpha * unit(lambda log_u: log_u**2).value + beta * unit(lambda log_u: log_u**3).value
    )
    assert abs(combined - separate) <= 2.0 * tol * max(1.0, abs(separate))


def test_integrate__endpoint_limit(toolkit: Toolkit):
    """Non-finite values in the first panel are replaced by the supplied limit"""

    def integrand(y):
        return np.where(y < 1e-3, np.nan, np.exp(-2.0 * math.pi * y))

    result = toolkit.quadrature.integrate_boltzmann_tail(integrand, at_zero=1.0)
    assert result.value == pytest.approx(1.0 / (2.0 * math.pi), abs=1e-4)


def test_integrate__no_endpoint_limit(toolkit: Toolkit):
    """Non-finite values without a limit raise QuadratureError"""
    with pytest.raises(QuadratureError):
        toolkit.quadrature.integrate_boltzmann_tail(lambda y: np.full_like(y, np.nan))


def test_integrate__exhausted_panels(toolkit: Toolkit):
    """Running out of panels before the tail is negligible is reported as non-converged"""
    result = toolkit.quadrature.integrate_boltzmann_tail(
        lambda y: np.exp(-2.0 * math.pi * y), spec=QuadratureSpec(max_panels=2)
    )
    assert not result.converged


@pytest.mark.parametrize(
    "settings",
    [
        {"points_per_panel": 1},
        {"panel_growth": 1.0},
        {"tol": 0.0},
        {"max_panels": 0},
        {"refinements": 0},
    ],
)
def test_quadrature_spec__invalid(settings):
    """Invalid engine settings are refused"""
    with pytest.raises(InvalidConfiguration):
        QuadratureSpec(**settings)
