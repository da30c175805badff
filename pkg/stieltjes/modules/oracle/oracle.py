"""Stieltjes toolkit: oracle module.

Independent reference values that every representation is validated against. Nothing here
shares a code path with the integral or series representations.
"""

from typing import Optional

from stieltjes.common.module import ModuleMapper, ToolkitModule
from stieltjes.common.values import ComputedValue
from stieltjes.modules.oracle.limit import (
    OracleConfig,
    gamma_limit_oracle,
    limit_partial_sum,
)
from stieltjes.modules.oracle.zeta import (
    digamma_series_ref,
    euler_gamma,
    hurwitz_zeta_int,
    zeta_int,
)


class OracleModule(ToolkitModule):
    """The OracleModule provides reference constants, zeta values and digamma values."""

    name = "Stieltjes Toolkit Oracle Module"
    help = "Limit-relation Stieltjes constants and integer-argument zeta and digamma references"

    def __init__(self, mapper: ModuleMapper, config: Optional[OracleConfig] = None):
        """Construct an instance of the OracleModule class."""
        super().__init__(mapper)

        self.config = config or OracleConfig()
        self.logger.debug("Oracle configuration: %s", self.config)

    def gamma_limit_oracle(
        self, k: int, a: float, cfg: Optional[OracleConfig] = None
    ) -> ComputedValue:
        """Return gamma_k(a) by the limit relation, extrapolated over doubled N."""
        self.logger.info("Oracle evaluation of gamma_%s(%r)", k, a)
        return gamma_limit_oracle(k, a, cfg or self.config)

    def limit_partial_sum(self, k: int, a: float, n: int, printed: bool = False) -> float:
        """Return the unextrapolated partial sum of the limit relation."""
        return limit_partial_sum(k, a, n, printed=printed)

    def zeta_int(self, m: int) -> float:
        """Return zeta(m) for an integer m >= 2."""
        return zeta_int(m)

    def hurwitz_zeta_int(self, m: int, a: float) -> float:
        """Return zeta(m, a) for an integer m >= 2."""
        return hurwitz_zeta_int(m, a)

    def digamma_series_ref(self, a: float) -> float:
        """Return psi(a) from the partial-fraction series."""
        return digamma_series_ref(a)

    def euler_gamma(self) -> float:
        """Return Euler's constant as computed by the oracle."""
        return euler_gamma()
