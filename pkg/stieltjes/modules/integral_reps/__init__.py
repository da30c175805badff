"""Stieltjes toolkit IntegralRepsModule."""

__all__ = [
    "IntegralRepsModule",
    "gamma0_integrand_limit",
    "gamma_m_integrand_limit",
    "hermite_integrand_limit",
]

from stieltjes.modules.integral_reps.integral_reps import IntegralRepsModule
from stieltjes.modules.integral_reps.integrands import (
    gamma0_integrand_limit,
    gamma_m_integrand_limit,
    hermite_integrand_limit,
)
