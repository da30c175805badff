"""Stieltjes toolkit QuadratureModule."""

__all__ = [
    "QuadratureModule",
    "QuadratureResult",
    "QuadratureSpec",
    "gauss_legendre",
]

from stieltjes.modules.quadrature.quadrature import QuadratureModule
from stieltjes.modules.quadrature.rules import (
    QuadratureResult,
    QuadratureSpec,
    gauss_legendre,
)
