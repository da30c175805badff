"""
Stieltjes Toolkit Modules Package Initialisation.

Provides pipework to link together the various modules within the toolkit and expose them to
the Toolkit object at setup.
"""

__all__ = [
    "CombinatoricsModule",
    "DerivedIdentitiesModule",
    "IntegralRepsModule",
    "OracleModule",
    "QuadratureModule",
    "SeriesRepsModule",
]

from stieltjes.modules.combinatorics import CombinatoricsModule
from stieltjes.modules.derived_identities import DerivedIdentitiesModule
from stieltjes.modules.integral_reps import IntegralRepsModule
from stieltjes.modules.oracle import OracleModule
from stieltjes.modules.quadrature import QuadratureModule
from stieltjes.modules.series_reps import SeriesRepsModule
