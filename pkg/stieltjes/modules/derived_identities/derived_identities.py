"""Stieltjes toolkit: derived identities module.

Quantities that follow from the Stieltjes constants: the shift identity
gamma_k(a + n) = gamma_k(a) - sum_{j<n} ln^k(a + j) / (a + j), differences of constants as
convergent logarithmic sums, polygamma values, generalized harmonic numbers, and the closed-form
right-hand sides of the order 2 and 3 sums of reciprocal powers of the nontrivial zeta zeros.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from stieltjes.common.constants import METHOD_TARGET, ORACLE_CHUNK_SIZE, MethodSelector
from stieltjes.common.decorators import index_check, positive_parameter
from stieltjes.common.exceptions import UnsupportedOrder
from stieltjes.common.module import ToolkitModule
from stieltjes.common.values import ComputedValue, StieltjesQuery
from stieltjes.modules.combinatorics import harmonic_exact
from stieltjes.modules.derived_identities.dispatch import evaluate, method_supports


@dataclass(frozen=True)
class HarmonicCheck:
    """H_n^(r) three ways. Unpacks as (exact, via_polygamma, via_integral)."""

    n: int
    r: int
    exact: Fraction
    via_polygamma: float
    via_integral: float
    integral_err: float
    integral_converged: bool

    def __iter__(self) -> Iterator:
        """Yield the three values in the order exact, polygamma route, integral route."""
        yield self.exact
        yield self.via_polygamma
        yield self.via_integral

    @property
    def max_deviation(self) -> float:
        """Return the largest deviation of either route from the exact value."""
        exact = float(self.exact)
        return max(abs(self.via_polygamma - exact), abs(self.via_integral - exact))


def _log_power_sum(ell: int, offset: float, n_stop: int, n_start: int = 0) -> float:
    """Return sum_{n=n_start..n_stop} ln^ell(n + offset) / (n + offset), compensated."""
    parts = []
    for start in range(n_start, n_stop + 1, ORACLE_CHUNK_SIZE):
        x = np.arange(start, min(start + ORACLE_CHUNK_SIZE, n_stop + 1), dtype=np.float64) + offset
        parts.append(math.fsum(np.log(x) ** ell / x))
    return math.fsum(parts)


def _antiderivative_gap(ell: int, lower: float, upper: float) -> float:
    """Return (ln^(ell+1)(upper) - ln^(ell+1)(lower)) / (ell + 1) without cancellation."""
    log_lower = math.log(lower)
    log_upper = math.log(upper)
    power_sum = math.fsum(log_upper**i * log_lower ** (ell - i) for i in range(ell + 1))
    return math.log1p((upper - lower) / lower) * power_sum / (ell + 1)


class DerivedIdentitiesModule(ToolkitModule):
    """The DerivedIdentitiesModule evaluates identities built on the Stieltjes constants."""

    name = "Stieltjes Toolkit Derived Identities Module"
    help = "Shifts, differences, polygamma values, harmonic numbers and zero-sum right-hand sides"

    def gamma(self, k: int, a: float, sel: Union[MethodSelector, str]) -> ComputedValue:
        """Return gamma_k(a) from the producer named by sel."""
        return evaluate(self.mapper, StieltjesQuery(k, a), sel)

    def supports(self, sel: Union[MethodSelector, str], k: int) -> bool:
        """Return whether the producer named by sel has a representation for gamma_k."""
        return method_supports(sel, k)

    @index_check("n", minimum=1)
    def gamma_shift(
        self,
        k: int,
        a: float,
        n: int,
        sel: Union[MethodSelector, str] = MethodSelector.ORACLE,
    ) -> ComputedValue:
        """Return gamma_k(a + n), as gamma_k(a) less the first n terms of its defining sum."""
        base = self.gamma(k, a, sel)
        self.logger.info(
            "Shifting gamma_%d(%r) by %d with the %s method", k, a, n, base.method.value
        )

        corrections = [math.log(a + j) ** k / (a + j) for j in range(n)]
        value = base.value - math.fsum(corrections)
        diagnostics = dict(base.diagnostics)
        diagnostics["shift"] = n
        return ComputedValue(
            value=value,
            err_estimate=base.err_estimate,
            method=base.method,
            work=base.work + n,
            converged=base.converged,
            diagnostics=diagnostics,
        )

    @index_check("ell")
    @positive_parameter("a")
    @positive_parameter("b")
    @index_check("N", minimum=1)
    def gamma_diff(self, ell: int, a: float, b: float, N: int) -> ComputedValue:
        """Return gamma_ell(a) - gamma_ell(b) as a convergent sum of logarithmic terms.

        The partial sum over n = 0..N is completed by the midpoint integral of the tail,
        int_{N+1/2}^inf [f(x + a) - f(x + b)] dx with f(x) = ln^ell(x) / x. The same completion
        is formed at N // 2. The reported err_estimate is the larger of the change between the
        two and the heuristic scale |a - b| (ell + 1) max(1, ln(N + max(a, b)))^ell / N^2 of
        the neglected terms. Neither is a bound, so N = 1, which has no second completion,
        never counts as converged.
        """
        a, b = float(a), float(b)
        self.logger.info("Difference gamma_%d(%r) - gamma_%d(%r) over N=%d", ell, a, ell, b, N)

        half = N // 2
        head = _log_power_sum(ell, a, half) - _log_power_sum(ell, b, half)
        rest = _log_power_sum(ell, a, N, half + 1) - _log_power_sum(ell, b, N, half + 1)
        partial = head + rest
        tail = _antiderivative_gap(ell, N + 0.5 + a, N + 0.5 + b)
        value = partial + tail
        coarse = head + _antiderivative_gap(ell, half + 0.5 + a, half + 0.5 + b)

        log_scale = max(1.0, math.log(N + max(a, b)))
        heuristic = abs(a - b) * (ell + 1) * log_scale**ell / N**2
        err_estimate = max(heuristic, abs(value - coarse))
        self.logger.debug("Partial sum %r, tail %r, coarse value %r", partial, tail, coarse)

        return ComputedValue(
            value=value,
            err_estimate=err_estimate,
            method=MethodSelector.ORACLE,
            work=2 * (N + 1),
            converged=N > 1 and err_estimate <= METHOD_TARGET * max(1.0, abs(value)),
            diagnostics={"partial_sum": partial, "tail": tail, "coarse_value": coarse},
        )

    @index_check("n")
    @positive_parameter("a")
    def polygamma(
        self, n: int, a: float, sel: Union[MethodSelector, str] = MethodSelector.ORACLE
    ) -> float:
        """Return psi^(n)(a) = (-1)^(n+1) n! zeta(n + 1, a).

        n = 0 is the digamma function, taken as -gamma_0(a) from the producer named by sel.
        """
        if n == 0:
            return -self.gamma(0, a, sel).value
        return (-1) ** (n + 1) * math.factorial(n) * self.mapper.oracle.hurwitz_zeta_int(n + 1, a)

    @index_check("n")
    @index_check("r", minimum=1)
    def gen_harmonic_check(self, n: int, r: int) -> HarmonicCheck:
        """Return H_n^(r) exactly, from polygamma differences, and by quadrature.

        The polygamma route is (-1)^(r-1) / (r-1)! [psi^(r-1)(n + 1) - psi^(r-1)(1)]; for r = 1
        it uses the digamma reference series. The quadrature route is
        (-1)^(r-1) / (r-1)! int_0^1 (t^n - 1) / (t - 1) ln^(r-1)(t) dt, integrated in the
        unit-interval form with t = 1 - u.
        """
        self.logger.info("Generalized harmonic number H_%d^(%d), three ways", n, r)
        exact = harmonic_exact(n, r)
        scale = (-1) ** (r - 1) / math.factorial(r - 1)

        if r == 1:
            oracle = self.mapper.oracle
            via_polygamma = oracle.digamma_series_ref(n + 1.0) - oracle.digamma_series_ref(1.0)
        else:
            via_polygamma = scale * (self.polygamma(r - 1, n + 1.0) - self.polygamma(r - 1, 1.0))

        def numerator(log_t: np.ndarray) -> np.ndarray:
            return -np.expm1(n * log_t) * log_t ** (r - 1)

        quad = self.mapper.quadrature.integrate_unit_log(
            numerator, at_zero=float(n) if r == 1 else 0.0
        )
        if not quad.converged:
            self.logger.warning("Quadrature for H_%d^(%d) did not converge", n, r)

        return HarmonicCheck(
            n=n,
            r=r,
            exact=exact,
            via_polygamma=via_polygamma,
            via_integral=scale * quad.value,
            integral_err=abs(scale) * quad.err_estimate,
            integral_converged=quad.converged,
        )

    def zero_sum_rhs(
        self, order: int, sel: Union[MethodSelector, str] = MethodSelector.ORACLE
    ) -> float:
        """Return the closed-form right-hand side of the order 2 or 3 zero sum.

        order 2: 1 - pi^2 / 8 + 2 gamma_1 + gamma^2
        order 3: 1 - (7/8) zeta(3) + gamma^3 + 3 gamma gamma_1 + (3/2) gamma_2

        The left-hand sides, sums over the nontrivial zeros, are not computed.
        """
        if order not in (2, 3):
            raise UnsupportedOrder(order, "zero sums of order 2 and 3")
        sel = MethodSelector.parse(sel)
        self.logger.info("Zero sum of order %d from %s constants", order, sel.value)

        euler = self.gamma(0, 1.0, sel).value
        gamma_1 = self.gamma(1, 1.0, sel).value
        if order == 2:
            return math.fsum([1.0, -(math.pi**2) / 8.0, 2.0 * gamma_1, euler**2])

        gamma_2 = self.gamma(2, 1.0, sel).value
        zeta_3 = self.mapper.oracle.zeta_int(3)
        return math.fsum(
            [1.0, -7.0 / 8.0 * zeta_3, euler**3, 3.0 * euler * gamma_1, 1.5 * gamma_2]
        )
