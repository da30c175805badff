"""Stieltjes toolkit OracleModule."""

__all__ = [
    "OracleConfig",
    "OracleModule",
    "digamma_series_ref",
    "euler_gamma",
    "gamma_limit_oracle",
    "hurwitz_zeta_int",
    "limit_partial_sum",
    "zeta_int",
]

from stieltjes.modules.oracle.limit import (
    OracleConfig,
    gamma_limit_oracle,
    limit_partial_sum,
)
from stieltjes.modules.oracle.oracle import OracleModule
from stieltjes.modules.oracle.zeta import (
    digamma_series_ref,
    euler_gamma,
    hurwitz_zeta_int,
    zeta_int,
)
