"""Stieltjes toolkit CombinatoricsModule."""

__all__ = [
    "CombinatoricsModule",
    "HarmonicValue",
    "StirlingTable",
    "bernoulli_even",
    "harmonic",
    "harmonic_exact",
    "stirling_closed_form",
    "stirling_table",
]

from stieltjes.modules.combinatorics.combinatorics import CombinatoricsModule
from stieltjes.modules.combinatorics.rationals import (
    HarmonicValue,
    bernoulli_even,
    harmonic,
    harmonic_exact,
)
from stieltjes.modules.combinatorics.stirling import (
    StirlingTable,
    stirling_closed_form,
    stirling_table,
)
