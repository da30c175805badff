"""Stieltjes toolkit: quadrature module.

Two integrand families appear in the integral representations:

- Semi-infinite integrands damped by 1 / (exp(2 pi y) - 1), integrated directly.
- Unit-interval integrands h(ln(1 - u)) / u with a logarithmic singularity at u = 1. The
  substitution u = 1 - exp(-v) maps these to h(-v) / expm1(v) on [0, inf), with decay rate 1.
  Working in v avoids forming 1 - u, which rounds to zero long before the integrand is
  negligible.
"""

import math
from typing import Callable, Optional

import numpy as np

from stieltjes.common.module import ModuleMapper, ToolkitModule
from stieltjes.modules.quadrature.rules import (
    Integrand,
    QuadratureResult,
    QuadratureSpec,
    integrate_semi_infinite,
)

BOLTZMANN_DECAY = 2.0 * math.pi
UNIT_LOG_DECAY = 1.0


def unit_log_integrand(numerator: Callable[[np.ndarray], np.ndarray]) -> Integrand:
    """Return h(-v) / expm1(v), the transform of h(ln(1 - u)) / u under u = 1 - exp(-v)."""

    def integrand(v: np.ndarray) -> np.ndarray:
        return numerator(-v) / np.expm1(v)

    return integrand


class QuadratureModule(ToolkitModule):
    """The QuadratureModule integrates the representations' two integrand families."""

    name = "Stieltjes Toolkit Quadrature Module"
    help = "Panel Gauss-Legendre quadrature for exponentially damped and log-singular integrands"

    def __init__(self, mapper: ModuleMapper, spec: Optional[QuadratureSpec] = None):
        """Construct an instance of the QuadratureModule class."""
        super().__init__(mapper)

        self.spec = spec or QuadratureSpec()
        self.logger.debug("Quadrature configuration: %s", self.spec)

    def integrate_boltzmann_tail(
        self,
        f: Integrand,
        spec: Optional[QuadratureSpec] = None,
        at_zero: Optional[float] = None,
    ) -> QuadratureResult:
        """Integrate f over [0, inf), where f decays like exp(-2 pi y).

        Arguments
        ---------
        f: callable
            Vectorized integrand.
        spec: QuadratureSpec, optional
            Overrides the module's configuration for this call.
        at_zero: float, optional
            The finite limit of f as y -> 0+, when the formula is 0/0 there.
        """
        spec = spec or self.spec
        return integrate_semi_infinite(
            f, BOLTZMANN_DECAY, spec, at_zero=at_zero, logger=self.logger
        )

    def integrate_unit_log(
        self,
        numerator: Callable[[np.ndarray], np.ndarray],
        spec: Optional[QuadratureSpec] = None,
        at_zero: Optional[float] = None,
    ) -> QuadratureResult:
        """Integrate h(ln(1 - u)) / u over (0, 1), given the numerator h.

        h is called with the (non-positive) values L = ln(1 - u). at_zero is the limit of the
        transformed integrand h(-v) / expm1(v) as v -> 0+, which equals the limit of
        h(ln(1 - u)) / u as u -> 0+.
        """
        spec = spec or self.spec
        return integrate_semi_infinite(
            unit_log_integrand(numerator),
            UNIT_LOG_DECAY,
            spec,
            at_zero=at_zero,
            logger=self.logger,
        )
