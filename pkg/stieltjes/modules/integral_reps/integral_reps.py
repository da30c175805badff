"""Stieltjes toolkit: integral representations module.

Three routes to gamma_k(a) by quadrature:

- gamma_hermite: a Hermite-type formula over [0, inf) damped by 1 / (exp(2 pi y) - 1), valid for
  every k.
- gamma0_u_integral: a unit-interval formula for gamma_0(a) = -psi(a).
- gamma_m_u_integral: the unit-interval formula for gamma_m(a), m >= 1.

Each takes literal=True to evaluate the complex-arithmetic form of the formula instead of its
real reduction; the imaginary part of the result is then returned in the diagnostics.
"""

import math
from typing import Optional

import numpy as np

from stieltjes.common.constants import MethodSelector
from stieltjes.common.decorators import positive_parameter
from stieltjes.common.exceptions import UnsupportedOrder
from stieltjes.common.module import ToolkitModule
from stieltjes.common.values import ComputedValue, StieltjesQuery
from stieltjes.modules.integral_reps.integrands import (
    gamma0_integrand_limit,
    gamma0_numerator,
    gamma0_numerator_literal,
    gamma_m_integrand_limit,
    gamma_m_numerator,
    gamma_m_numerator_literal,
    hermite_integrand,
    hermite_integrand_limit,
    hermite_integrand_literal,
)
from stieltjes.modules.quadrature import QuadratureResult, QuadratureSpec


def _real_part(func):
    """Wrap a complex-valued integrand to return its real part."""
    return lambda x: np.real(func(x))


def _imag_part(func):
    """Wrap a complex-valued integrand to return its imaginary part."""
    return lambda x: np.imag(func(x))


class IntegralRepsModule(ToolkitModule):
    """The IntegralRepsModule evaluates Stieltjes constants by quadrature."""

    name = "Stieltjes Toolkit Integral Representations Module"
    help = "Compute gamma_k(a) from its Hermite-type and unit-interval integral representations"

    def _result(
        self,
        value: float,
        quad: QuadratureResult,
        method: MethodSelector,
        scale: float = 1.0,
        imaginary: Optional[QuadratureResult] = None,
    ) -> ComputedValue:
        """Package a quadrature result; scale is the factor applied to the integral."""
        diagnostics = {"levels": quad.levels}
        if imaginary is not None:
            diagnostics["imaginary_part"] = scale * imaginary.value
        if not quad.converged:
            self.logger.warning("Quadrature did not converge; reporting value %r", value)
        return ComputedValue(
            value=value,
            err_estimate=abs(scale) * quad.err_estimate,
            method=method,
            work=quad.nodes_used,
            converged=quad.converged,
            diagnostics=diagnostics,
        )

    def gamma_hermite(
        self,
        q: StieltjesQuery,
        spec: Optional[QuadratureSpec] = None,
        literal: bool = False,
    ) -> ComputedValue:
        """Return gamma_k(a) from the Hermite-type integral.

        gamma_k(a) = ln^k(a) / (2a) - ln^(k+1)(a) / (k+1)
                     + (1/a) int_0^inf 2 Re[(y/a + i) ln^k(a + iy)]
                                       / ((1 + y^2/a^2)(exp(2 pi y) - 1)) dy
        """
        k, a = q.k, float(q.a)
        self.logger.info("Hermite integral for gamma_%d(%r)", k, a)

        log_a = math.log(a)
        leading = log_a**k / (2.0 * a) - log_a ** (k + 1) / (k + 1)
        at_zero = hermite_integrand_limit(k, a)
        quadrature = self.mapper.quadrature

        imaginary = None
        if literal:
            integrand = hermite_integrand_literal(k, a)
            quad = quadrature.integrate_boltzmann_tail(_real_part(integrand), spec, at_zero)
            imaginary = quadrature.integrate_boltzmann_tail(_imag_part(integrand), spec, 0.0)
        else:
            quad = quadrature.integrate_boltzmann_tail(hermite_integrand(k, a), spec, at_zero)

        return self._result(
            leading + quad.value / a, quad, MethodSelector.HERMITE, 1.0 / a, imaginary
        )

    @positive_parameter("a")
    def gamma0_u_integral(
        self,
        a: float,
        spec: Optional[QuadratureSpec] = None,
        literal: bool = False,
    ) -> ComputedValue:
        """Return gamma_0(a) = -psi(a) from the unit-interval integral.

        gamma_0(a) = 1/(2a) - ln a + (1/(pi a)) int_0^1 w / (1 + w^2) du/u,
        with w = -ln(1 - u) / (2 pi a).
        """
        a = float(a)
        self.logger.info("Unit-interval integral for gamma_0(%r)", a)

        leading = 0.5 / a - math.log(a)
        at_zero = gamma0_integrand_limit(a)
        quadrature = self.mapper.quadrature

        imaginary = None
        if literal:
            numerator = gamma0_numerator_literal(a)
            quad = quadrature.integrate_unit_log(_real_part(numerator), spec, at_zero)
            imaginary = quadrature.integrate_unit_log(_imag_part(numerator), spec, 0.0)
        else:
            quad = quadrature.integrate_unit_log(gamma0_numerator(a), spec, at_zero)

        return self._result(leading + quad.value, quad, MethodSelector.U_INTEGRAL, 1.0, imaginary)

    def gamma_m_u_integral(
        self,
        q: StieltjesQuery,
        spec: Optional[QuadratureSpec] = None,
        literal: bool = False,
    ) -> ComputedValue:
        """Return gamma_m(a), m >= 1, from the unit-interval integral.

        gamma_m(a) = ln^m(a) / (2a) - ln^(m+1)(a) / (m+1)
                     - (1/pi) int_0^1 Im[ln^m(z) / z] du/u,  z = a - i ln(1 - u) / (2 pi)
        """
        m, a = q.k, float(q.a)
        if m < 1:
            raise UnsupportedOrder(m, "m >= 1; gamma0_u_integral covers m = 0")
        self.logger.info("Unit-interval integral for gamma_%d(%r)", m, a)

        log_a = math.log(a)
        leading = log_a**m / (2.0 * a) - log_a ** (m + 1) / (m + 1)
        at_zero = gamma_m_integrand_limit(m, a)
        quadrature = self.mapper.quadrature

        imaginary = None
        if literal:
            numerator = gamma_m_numerator_literal(m, a)
            quad = quadrature.integrate_unit_log(_real_part(numerator), spec, at_zero)
            imaginary = quadrature.integrate_unit_log(_imag_part(numerator), spec, 0.0)
        else:
            quad = quadrature.integrate_unit_log(gamma_m_numerator(m, a), spec, at_zero)

        return self._result(leading + quad.value, quad, MethodSelector.U_INTEGRAL, 1.0, imaginary)

