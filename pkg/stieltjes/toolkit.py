r"""Stieltjes toolkit entry point.

Stieltjes Toolkit
     ___ _   _     _ _   _
    / __| |_(_)___| | |_(_)___ ___
    \__ \  _| / -_) |  _| / -_|_-<
    |___/\__|_\___|_|\__|/ \___/__/
                       |__/   gamma_k(a)
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from stieltjes.common.batching import batch_evaluate
from stieltjes.common.constants import (
    DEFAULT_STIRLING_N_MAX,
    STIRLING_SERIES_TERM_CAP,
    MethodSelector,
)
from stieltjes.common.interpolation import VariableInterpolator
from stieltjes.common.module import ModuleMapper
from stieltjes.common.values import ComputedValue, StieltjesQuery
from stieltjes.modules import (
    CombinatoricsModule,
    DerivedIdentitiesModule,
    IntegralRepsModule,
    OracleModule,
    QuadratureModule,
    SeriesRepsModule,
)
from stieltjes.modules.oracle import OracleConfig
from stieltjes.modules.quadrature import QuadratureSpec

# One grid point: the query and the method to evaluate it with
GridPoint = Tuple[StieltjesQuery, MethodSelector]


class Toolkit:
    """Stieltjes constants toolkit.

    This class configures every module once, links them together, and exposes them as
    attributes so that IDEs can pick them up.
    """

    def __init__(
        self,
        n_max: Union[int, str] = DEFAULT_STIRLING_N_MAX,
        quadrature_spec: Optional[QuadratureSpec] = None,
        oracle_config: Optional[OracleConfig] = None,
        stirling_terms: Union[int, str] = STIRLING_SERIES_TERM_CAP,
    ):
        """Configure a Stieltjes Toolkit object.

        The integer settings may be given as strings containing ${ENV_VAR} references.
        """
        self.logger = logging.getLogger(__name__)
        self.logger.info("Setting up the Stieltjes toolkit")

        interpolator = VariableInterpolator()
        n_max = interpolator.interpolate_int("n_max", n_max)
        stirling_terms = interpolator.interpolate_int("stirling_terms", stirling_terms)
        self.logger.debug("Stirling table size: %d; series term cap: %d", n_max, stirling_terms)

        mapper = ModuleMapper()

        # Configure modules here so that IDEs can pick them up
        self.logger.debug("Setting up the Combinatorics module")
        self.combinatorics = CombinatoricsModule(mapper, n_max=n_max)
        mapper.combinatorics = self.combinatorics

        self.logger.debug("Setting up the Quadrature module")
        self.quadrature = QuadratureModule(mapper, spec=quadrature_spec)
        mapper.quadrature = self.quadrature

        self.logger.debug("Setting up the Oracle module")
        self.oracle = OracleModule(mapper, config=oracle_config)
        mapper.oracle = self.oracle

        self.logger.debug("Setting up the Integral Representations module")
        self.integral_reps = IntegralRepsModule(mapper)
        mapper.integral_reps = self.integral_reps

        self.logger.debug("Setting up the Series Representations module")
        self.series_reps = SeriesRepsModule(mapper, max_terms=stirling_terms)
        mapper.series_reps = self.series_reps

        self.logger.debug("Setting up the Derived Identities module")
        self.derived = DerivedIdentitiesModule(mapper)
        mapper.derived = self.derived

        self.logger.info("Stieltjes toolkit configured")

    def compute(
        self, k: int, a: float, method: Union[MethodSelector, str] = MethodSelector.HERMITE
    ) -> ComputedValue:
        """Return gamma_k(a) from the named method."""
        return self.derived.gamma(k, a, method)

    def compute_grid(
        self,
        queries: Sequence[StieltjesQuery],
        methods: Sequence[Union[MethodSelector, str]],
        threads: Optional[int] = None,
    ) -> List[Tuple[GridPoint, ComputedValue, float]]:
        """Evaluate every applicable (query, method) pair in parallel.

        Pairs the method has no representation for are skipped. Results come back in the
        order of queries, then methods, each with the seconds it took.
        """
        selectors = [MethodSelector.parse(method) for method in methods]
        points = [
            (query, sel)
            for query in queries
            for sel in selectors
            if self.derived.supports(sel, query.k)
        ]
        self.logger.info("Evaluating a grid of %d points", len(points))

        def evaluate_point(point: GridPoint) -> ComputedValue:
            query, sel = point
            return self.derived.gamma(query.k, query.a, sel)

        results = batch_evaluate(points, evaluate_point, threads=threads)
        return [(point, value, seconds) for point, (value, seconds) in zip(points, results)]

    def __enter__(self):
        """Allow for entry as a context manager."""
        self.logger.debug("Entering Stieltjes toolkit context manager")
        return self

    def __exit__(self, *args):
        """Leave the context without suppressing exceptions."""
        self.logger.debug("Discarding Stieltjes toolkit context manager")
        return False
