"""Stieltjes toolkit DerivedIdentitiesModule."""

__all__ = [
    "METHOD_K_LIMITS",
    "DerivedIdentitiesModule",
    "HarmonicCheck",
    "evaluate",
    "method_supports",
]

from stieltjes.modules.derived_identities.derived_identities import (
    DerivedIdentitiesModule,
    HarmonicCheck,
)
from stieltjes.modules.derived_identities.dispatch import (
    METHOD_K_LIMITS,
    evaluate,
    method_supports,
)
