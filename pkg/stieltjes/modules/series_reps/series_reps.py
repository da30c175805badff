"""Stieltjes toolkit: series representations module.

With c = 1 / (2 pi a) and t(n, j) = s(n, j) / n!:

- gamma0_stirling sums the n-outer Stirling series
      gamma_0(a) = 1/(2a) - ln a
                   - (1/(pi a)) sum_{n>=1} ((-1)^n / n) sum_k (-1)^k (2k+1)! c^(2k+1) t(n, 2k+1)
- gamma0_stirling_kfirst sums the same double series with k outermost. Its inner sums tend to
  -zeta(2k+2), so its outer series is the asymptotic series of gamma0_asymptotic.
- gamma0_asymptotic evaluates
      gamma_0(a) = 1/(2a) - ln a + (1/(2 pi^2 a^2)) sum_n (-1)^n (2n+1)! zeta(2n+2) / (2 pi a)^(2n)
  truncated at its smallest term.
- gamma1_stirling evaluates
      gamma_1(a) = ln a / (2a) - ln^2(a) / 2 + ln a [-psi(a) - 1/(2a) + ln a]
                   - (1/(pi a)) sum_{n>=1} (1/n) sum_k (-1)^k c^(2k+1) |s(2k+2, 2)| |t(n, 2k+1)|
  with |s(2k+2, 2)| = (2k+1)! H_(2k+1).

No convergence rate is known for the reordered Stirling series. At a = 1 the error of gamma_0
is about -7e-4 after 16 outer terms, -2e-5 after 64 and +1.3e-5 after 128, and it does not improve
beyond that, while the last term keeps shrinking. The reported error estimate is N times the
last term, a scale rather than a bound.
"""

import math
from dataclasses import asdict, dataclass
from itertools import islice
from typing import Optional, Tuple, Union

import numpy as np

from stieltjes.common.constants import (
    ASYMPTOTIC_TERM_CAP,
    INNER_SUM_DOUBLINGS,
    METHOD_TARGET,
    STIRLING_SERIES_TERM_CAP,
    STIRLING_TERM_TOL,
    MethodSelector,
)
from stieltjes.common.decorators import index_check, positive_parameter
from stieltjes.common.exceptions import CapacityExceeded, DomainError
from stieltjes.common.module import ModuleMapper, ToolkitModule
from stieltjes.common.values import ComputedValue, StieltjesQuery
from stieltjes.modules.combinatorics import harmonic_exact, stirling_table
from stieltjes.modules.series_reps.expansions import (
    asymptotic_terms,
    extrapolated_inner_sum,
    inner_sum_sequence,
    odd_columns,
    odd_factorial_weights,
    smallest_term_index,
    stirling_outer_terms,
)


@dataclass(frozen=True)
class SeriesDiagnostics:
    """How a series was truncated.

    `truncation_index` and `regime_ok` describe the asymptotic series: the index of its
    smallest term, and whether the terms were still shrinking at the truncation point.
    """

    terms_used: int
    last_term: float
    truncation_index: int = -1
    regime_ok: bool = True

    def __post_init__(self):
        """Enforce terms_used >= 1 and a non-negative last term."""
        if self.terms_used < 1:
            raise DomainError("terms_used", self.terms_used, "must be at least 1")
        if not self.last_term >= 0 and not math.isnan(self.last_term):
            raise DomainError("last_term", self.last_term, "must be non-negative")


def _finite_sum(terms) -> float:
    """Return the compensated sum of the terms, or NaN once any of them has overflowed."""
    if not np.all(np.isfinite(terms)):
        return math.nan
    return math.fsum(terms)


def _converged(value: float, err_estimate: float) -> bool:
    """Apply the method accuracy target."""
    return bool(err_estimate <= METHOD_TARGET * max(1.0, abs(value)))


class SeriesRepsModule(ToolkitModule):
    """The SeriesRepsModule evaluates Stieltjes constants from their series representations."""

    name = "Stieltjes Toolkit Series Representations Module"
    help = "Compute gamma_0(a) and gamma_1(a) from Stirling-number and asymptotic series"

    def __init__(self, mapper: ModuleMapper, max_terms: int = STIRLING_SERIES_TERM_CAP):
        """Construct an instance of the SeriesRepsModule class."""
        super().__init__(mapper)

        self.max_terms = max_terms
        self.logger.debug("Stirling series capped at %d outer terms", max_terms)

    def _exact_table(self, n_terms: int):
        """Return the shared Stirling table, checking that it covers n_terms rows."""
        table = self.mapper.combinatorics.table
        limit = min(table.n_max, self.max_terms)
        if n_terms > limit:
            raise CapacityExceeded(n_terms, limit)
        return table

    def _stirling_result(
        self,
        value: float,
        terms: np.ndarray,
        err_extra: float = 0.0,
        conditioning: Optional[float] = None,
    ) -> ComputedValue:
        """Package the outcome of an n-outer Stirling series."""
        n_terms = len(terms)
        last_term = float(abs(terms[-1]))
        err_estimate = n_terms * last_term + err_extra
        if not np.all(np.isfinite(terms)):
            self.logger.warning("Stirling series terms overflowed; a is too small for this series")
            value, err_estimate = math.nan, math.inf

        diagnostics = asdict(SeriesDiagnostics(terms_used=n_terms, last_term=last_term))
        diagnostics["conditioning"] = (
            conditioning if conditioning is not None else _finite_sum(np.abs(terms))
        )
        return ComputedValue(
            value=value,
            err_estimate=err_estimate,
            method=MethodSelector.STIRLING,
            work=n_terms,
            converged=_converged(value, err_estimate),
            diagnostics=diagnostics,
        )

    @positive_parameter("a")
    @index_check("N", minimum=1)
    def gamma0_stirling(
        self, a: float, N: Optional[int] = None, tol: float = STIRLING_TERM_TOL
    ) -> ComputedValue:
        """Return gamma_0(a) from the n-outer Stirling series.

        With N the series is truncated after exactly N outer terms. Without it the series stops
        at the first outer term smaller than tol in magnitude, or at the module's cap.
        """
        a = float(a)
        if not tol > 0:
            raise DomainError("tol", tol, "must be greater than zero")
        n_terms = self.max_terms if N is None else N
        table = self._exact_table(n_terms)

        c = 1.0 / (2.0 * math.pi * a)
        k_terms = (n_terms + 1) // 2
        weights = odd_factorial_weights(c, k_terms) * np.where(np.arange(k_terms) % 2, -1.0, 1.0)
        with np.errstate(over="ignore", invalid="ignore"):
            inner = stirling_outer_terms(odd_columns(table, n_terms), weights)
            signs = np.where(np.arange(1, n_terms + 1) % 2, -1.0, 1.0)
            terms = -(signs * inner) / (math.pi * a)

        if N is None:
            small = np.flatnonzero(np.abs(terms) < tol)
            if small.size:
                terms = terms[: small[0] + 1]
        self.logger.info("Stirling series for gamma_0(%r) with %d terms", a, len(terms))

        value = 0.5 / a - math.log(a) + _finite_sum(terms)
        return self._stirling_result(value, terms)

    @positive_parameter("a")
    @index_check("K")
    @index_check("N", minimum=1)
    def gamma0_stirling_kfirst(
        self, a: float, K: int, N: int, extrapolate_inner: bool = False
    ) -> ComputedValue:
        """Return gamma_0(a) from the k-outer Stirling series, k = 0..K, n = 1..N.

        The inner sums converge like ln^(2k)(N) / N. With extrapolate_inner=True they are
        extrapolated over a doubling sequence ending at N instead of being truncated. N may
        exceed the shared table, in which case a scaled-only table is built.
        """
        a = float(a)
        self.logger.info("k-first Stirling series for gamma_0(%r): K=%d, N=%d", a, K, N)

        columns = 2 * K + 1
        if N <= self.mapper.combinatorics.table.n_max:
            table = self.mapper.combinatorics.table
        else:
            table = stirling_table(N, k_max=columns, exact=False)

        doublings = min(INNER_SUM_DOUBLINGS, int(N).bit_length() - 5)
        if extrapolate_inner and doublings < 1:
            raise DomainError("N", N, "must be at least 32 to extrapolate the inner sums")

        inner_sums = []
        for k in range(K + 1):
            if extrapolate_inner:
                inner_sums.append(extrapolated_inner_sum(table, k, N, doublings))
            else:
                inner_sums.append(inner_sum_sequence(table, k, [N])[0])

        c = 1.0 / (2.0 * math.pi * a)
        weights = odd_factorial_weights(c, K + 1)
        terms = [
            -((-1) ** k) * weight * inner / (math.pi * a)
            for k, (weight, inner) in enumerate(zip(weights, inner_sums))
        ]
        value = 0.5 / a - math.log(a) + math.fsum(terms)

        truncation_index = smallest_term_index(terms)
        regime_ok = truncation_index == K or K == 0
        if not regime_ok:
            self.logger.warning(
                "Outer terms of the k-first series grow beyond k=%d; the series is past its "
                "smallest term",
                truncation_index,
            )

        err_estimate = abs(terms[-1])
        diagnostics = asdict(
            SeriesDiagnostics(
                terms_used=K + 1,
                last_term=abs(terms[-1]),
                truncation_index=truncation_index,
                regime_ok=regime_ok,
            )
        )
        diagnostics["inner_sums"] = tuple(inner_sums)
        return ComputedValue(
            value=value,
            err_estimate=err_estimate,
            method=MethodSelector.STIRLING,
            work=(K + 1) * N,
            converged=regime_ok and _converged(value, err_estimate),
            diagnostics=diagnostics,
        )

    @positive_parameter("a")
    def gamma0_asymptotic(self, a: float, n_terms: Optional[int] = None) -> ComputedValue:
        """Return gamma_0(a) from its asymptotic series.

        By default the series is truncated at its smallest term; n_terms sums terms 0..n_terms-1
        instead. The error estimate is the magnitude of the first omitted term, and regime_ok is
        cleared when the very first term is already the smallest (a is too small for the
        series to be of any use) or when n_terms runs past the smallest term.
        """
        a = float(a)
        prefactor = 1.0 / (2.0 * math.pi**2 * a**2)

        terms = []
        for term in islice(asymptotic_terms(a), ASYMPTOTIC_TERM_CAP):
            terms.append(term)
            if len(terms) > 1 and abs(term) >= abs(terms[-2]):
                break
        optimal = smallest_term_index(terms)

        if n_terms is None:
            truncation_index = optimal
        else:
            if n_terms < 1:
                raise DomainError("n_terms", n_terms, "must be a positive integer")
            truncation_index = n_terms - 1

        needed = truncation_index + 2
        if len(terms) < needed:
            terms = list(islice(asymptotic_terms(a), needed))

        regime_ok = optimal > 0 and truncation_index <= optimal
        included = terms[: truncation_index + 1]
        value = 0.5 / a - math.log(a) + prefactor * math.fsum(included)
        err_estimate = prefactor * abs(terms[truncation_index + 1])

        self.logger.info(
            "Asymptotic series for gamma_0(%r): truncated at n=%d (smallest term at n=%d)",
            a,
            truncation_index,
            optimal,
        )
        if not regime_ok:
            self.logger.warning("Asymptotic regime violated for a=%r", a)

        diagnostics = asdict(
            SeriesDiagnostics(
                terms_used=truncation_index + 1,
                last_term=prefactor * abs(included[-1]),
                truncation_index=truncation_index,
                regime_ok=regime_ok,
            )
        )
        return ComputedValue(
            value=value,
            err_estimate=err_estimate,
            method=MethodSelector.ASYMPTOTIC,
            work=truncation_index + 1,
            converged=regime_ok and _converged(value, err_estimate),
            diagnostics=diagnostics,
        )

    def _psi(self, a: float, source: MethodSelector, n_terms: int) -> Tuple[float, float]:
        """Return psi(a) and its error estimate from the named producer."""
        if source == MethodSelector.ORACLE:
            return self.mapper.oracle.digamma_series_ref(a), 0.0

        if source == MethodSelector.U_INTEGRAL:
            result = self.mapper.integral_reps.gamma0_u_integral(a)
        elif source == MethodSelector.HERMITE:
            result = self.mapper.integral_reps.gamma_hermite(StieltjesQuery(0, a))
        elif source == MethodSelector.ASYMPTOTIC:
            result = self.gamma0_asymptotic(a)
        else:
            result = self.gamma0_stirling(a, n_terms)
        return -result.value, result.err_estimate

    @positive_parameter("a")
    @index_check("N", minimum=1)
    def gamma1_stirling(
        self,
        a: float,
        N: Optional[int] = None,
        psi_source: Union[MethodSelector, str] = MethodSelector.ORACLE,
        signed_reading: bool = False,
    ) -> ComputedValue:
        """Return gamma_1(a) from the Stirling series with harmonic-number weights.

        Arguments
        ---------
        a: float
            Hurwitz parameter.
        N: int, optional
            Outer terms to sum; defaults to the module's cap.
        psi_source: MethodSelector or str
            Producer of psi(a): the digamma reference series by default, or any gamma_0 method.
        signed_reading: bool
            Replace (-1)^k |s(2k+2, 2)| |s(n, 2k+1)| with the signed product
            s(2k+2, 2) s(n, 2k+1) (-1)^n. This reading disagrees with the limit relation and is
            kept to demonstrate that.
        """
        a = float(a)
        source = MethodSelector.parse(psi_source)
        n_terms = self.max_terms if N is None else N
        table = self._exact_table(n_terms)
        self.logger.info(
            "Stirling series for gamma_1(%r) with %d terms, psi from %s", a, n_terms, source.value
        )

        psi, psi_err = self._psi(a, source, n_terms)

        c = 1.0 / (2.0 * math.pi * a)
        k_terms = (n_terms + 1) // 2
        harmonic_weights = np.array([float(harmonic_exact(2 * k + 1)) for k in range(k_terms)])
        weights = odd_factorial_weights(c, k_terms) * harmonic_weights
        if signed_reading:
            weights = -weights
        else:
            weights *= np.where(np.arange(k_terms) % 2, -1.0, 1.0)

        with np.errstate(over="ignore", invalid="ignore"):
            inner = stirling_outer_terms(np.abs(odd_columns(table, n_terms)), weights)
            terms = -inner / (math.pi * a)

        log_a = math.log(a)
        prefix = [log_a / (2.0 * a), -0.5 * log_a**2, log_a * (-psi - 0.5 / a + log_a)]
        value = math.fsum(prefix) + _finite_sum(terms)
        conditioning = math.fsum(abs(term) for term in prefix) + _finite_sum(np.abs(terms))
        return self._stirling_result(value, terms, abs(log_a) * psi_err, conditioning)
