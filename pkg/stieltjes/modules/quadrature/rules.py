"""Panel quadrature on [0, inf) for exponentially damped integrands.

The half-line is cut into panels whose widths grow geometrically from 1/decay, and each
panel is integrated with a fixed-order Gauss-Legendre rule. Gauss-Legendre nodes are interior
to every panel, so the integrand is never evaluated at y = 0 itself.

The panel layout is chosen once, at the base order: panels are added until the right edge
passes the point where exp(-decay * y) < tol / 100, and then for as long as the last panel
still contributes more than tol / 100 of the running total. The value is then refined by
doubling the number of points per panel on the same layout, and the error estimate is the
difference between the last two levels.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import numpy as np

from stieltjes.common.constants import (
    DEFAULT_MAX_PANELS,
    DEFAULT_PANEL_GROWTH,
    DEFAULT_POINTS_PER_PANEL,
    DEFAULT_QUADRATURE_TOL,
    MAX_QUADRATURE_REFINEMENTS,
)
from stieltjes.common.exceptions import InvalidConfiguration, QuadratureError

RULES_LOGGER = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureSpec:
    """Configuration of the panel quadrature engine."""

    points_per_panel: int = DEFAULT_POINTS_PER_PANEL
    panel_growth: float = DEFAULT_PANEL_GROWTH
    tol: float = DEFAULT_QUADRATURE_TOL
    max_panels: int = DEFAULT_MAX_PANELS
    refinements: int = MAX_QUADRATURE_REFINEMENTS

    def __post_init__(self):
        """Validate the configuration."""
        if not isinstance(self.points_per_panel, int) or self.points_per_panel < 2:
            raise InvalidConfiguration("points_per_panel must be an integer of at least 2")
        if not self.panel_growth > 1:
            raise InvalidConfiguration("panel_growth must be greater than 1")
        if not self.tol > 0:
            raise InvalidConfiguration("tol must be greater than zero")
        if not isinstance(self.max_panels, int) or self.max_panels < 1:
            raise InvalidConfiguration("max_panels must be a positive integer")
        if not isinstance(self.refinements, int) or self.refinements < 1:
            raise InvalidConfiguration("refinements must be a positive integer")


@dataclass(frozen=True)
class QuadratureResult:
    """The outcome of one integration.

    `converged` is set when the last two refinement levels differ by no more than
    tol * max(1, |value|) and the panel layout reached its truncation point.
    """

    value: float
    err_estimate: float
    nodes_used: int
    converged: bool
    levels: Tuple[float, ...] = field(default=(), compare=False, repr=False)


@lru_cache(maxsize=32)
def gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return the read-only Gauss-Legendre nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _panel_sum(
    f: Integrand,
    lower: float,
    upper: float,
    order: int,
    at_zero: Optional[float],
    first: bool,
) -> float:
    """Integrate f over one panel with an order-point Gauss-Legendre rule."""
    nodes, weights = gauss_legendre(order)
    half = 0.5 * (upper - lower)
    y = (0.5 * (upper + lower)) + half * nodes

    with np.errstate(over="ignore", divide="ignore", invalid="ignore", under="ignore"):
        values = np.broadcast_to(np.asarray(f(y), dtype=np.float64), y.shape)

    bad = ~np.isfinite(values)
    if bad.any():
        # Only the first panel can hold nodes close enough to zero to hit a 0/0 form
        if at_zero is None or not first:
            raise QuadratureError(int(bad.sum()))
        values = np.where(bad, at_zero, values)

    return half * math.fsum(weights * values)


def integrate_semi_infinite(
    f: Integrand,
    decay: float,
    spec: QuadratureSpec,
    at_zero: Optional[float] = None,
    logger: Optional[logging.Logger] = None,
) -> QuadratureResult:
    """Integrate a vectorized integrand over [0, inf).

    Arguments
    ---------
    f: callable
        Integrand taking and returning numpy arrays; it must decay like exp(-decay * y)
        times at most polylogarithmic growth.
    decay: float
        Exponential decay rate of the integrand, which fixes the panel geometry.
    spec: QuadratureSpec
        Engine configuration.
    at_zero: float, optional
        Limit of the integrand as y -> 0+, substituted for non-finite values in the
        first panel.
    logger: logging.Logger, optional
        Logger to report levels through; defaults to this module's logger.
    """
    logger = logger or RULES_LOGGER
    tol = spec.tol
    y_max = math.log(100.0 / tol) / decay

    panels: List[Tuple[float, float]] = []
    contributions: List[float] = []
    width = 1.0 / decay
    lower = 0.0
    exhausted = False
    while len(panels) < spec.max_panels:
        upper = lower + width
        contributions.append(
            _panel_sum(f, lower, upper, spec.points_per_panel, at_zero, not panels)
        )
        panels.append((lower, upper))
        lower, width = upper, width * spec.panel_growth
        if upper >= y_max:
            total = math.fsum(contributions)
            if abs(contributions[-1]) <= tol / 100.0 * max(1.0, abs(total)):
                break
    else:
        logger.warning(
            "Panel layout exhausted %d panels at y=%g before the tail fell below tolerance",
            spec.max_panels,
            lower,
        )
        exhausted = True

    order = spec.points_per_panel
    value = math.fsum(contributions)
    levels = [value]
    nodes_used = len(panels) * order
    err_estimate = math.inf
    logger.debug("Level n=%d over %d panels: %r", order, len(panels), value)

    for _ in range(spec.refinements):
        order *= 2
        refined = math.fsum(
            _panel_sum(f, lo, hi, order, at_zero, index == 0)
            for index, (lo, hi) in enumerate(panels)
        )
        nodes_used += len(panels) * order
        err_estimate = abs(refined - value)
        value = refined
        levels.append(value)
        logger.debug("Level n=%d: %r (difference %.3g)", order, value, err_estimate)
        if err_estimate <= tol * max(1.0, abs(value)):
            break

    converged = not exhausted and err_estimate <= tol * max(1.0, abs(value))
    if not converged:
        logger.warning(
            "Quadrature did not converge: value %r, estimated error %.3g", value, err_estimate
        )

    return QuadratureResult(
        value=value,
        err_estimate=err_estimate,
        nodes_used=nodes_used,
        converged=converged,
        levels=tuple(levels),
    )
