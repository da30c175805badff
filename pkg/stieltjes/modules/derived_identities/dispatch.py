"""Routing of a (k, a) query to the producer named by a method tag.

    hermite     every k
    u_integral  every k (k = 0 has its own formula)
    stirling    k <= 1
    asymptotic  k = 0
    oracle      k <= 8
"""

import logging
from typing import Union

from stieltjes.common.constants import ORACLE_K_BUDGET, MethodSelector
from stieltjes.common.exceptions import ComputationError, UnsupportedOrder
from stieltjes.common.module import ModuleMapper
from stieltjes.common.values import ComputedValue, StieltjesQuery

DISPATCH_LOGGER = logging.getLogger(__name__)

# Largest k each method has a representation for; None means unbounded
METHOD_K_LIMITS = {
    MethodSelector.HERMITE: None,
    MethodSelector.U_INTEGRAL: None,
    MethodSelector.STIRLING: 1,
    MethodSelector.ASYMPTOTIC: 0,
    MethodSelector.ORACLE: ORACLE_K_BUDGET,
}


def method_supports(method: Union[MethodSelector, str], k: int) -> bool:
    """Return whether the method has a representation for gamma_k."""
    limit = METHOD_K_LIMITS[MethodSelector.parse(method)]
    return limit is None or k <= limit


def evaluate(
    mapper: ModuleMapper, q: StieltjesQuery, method: Union[MethodSelector, str]
) -> ComputedValue:
    """Evaluate gamma_k(a) with the named producer.

    Errors raised by the producer propagate unchanged after the method tag is logged.
    """
    sel = MethodSelector.parse(method)
    limit = METHOD_K_LIMITS[sel]
    if sel != MethodSelector.ORACLE and limit is not None and q.k > limit:
        raise UnsupportedOrder(q.k, f"k <= {limit} for the {sel.value} method")

    try:
        if sel == MethodSelector.HERMITE:
            return mapper.integral_reps.gamma_hermite(q)
        if sel == MethodSelector.U_INTEGRAL:
            if q.k == 0:
                return mapper.integral_reps.gamma0_u_integral(q.a)
            return mapper.integral_reps.gamma_m_u_integral(q)
        if sel == MethodSelector.STIRLING:
            if q.k == 0:
                return mapper.series_reps.gamma0_stirling(q.a)
            return mapper.series_reps.gamma1_stirling(q.a)
        if sel == MethodSelector.ASYMPTOTIC:
            return mapper.series_reps.gamma0_asymptotic(q.a)
        return mapper.oracle.gamma_limit_oracle(q.k, q.a)
    except ComputationError:
        DISPATCH_LOGGER.error("The %s method failed for gamma_%d(%r)", sel.value, q.k, q.a)
        raise
