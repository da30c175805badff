"""Toolkit module plumbing.

Every family of numerical operations (combinatorics, quadrature, the limit-relation oracle,
the integral and series representations and the derived identities) is a ToolkitModule. The
representations never import one another: they reach shared state, such as the Stirling table
or the quadrature configuration, through the ModuleMapper that the Toolkit fills in.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from stieltjes.modules import (
        CombinatoricsModule,
        DerivedIdentitiesModule,
        IntegralRepsModule,
        OracleModule,
        QuadratureModule,
        SeriesRepsModule,
    )


# pylint: disable=R0903
class ModuleMapper:
    """Links the configured modules to one another.

    The Toolkit assigns the attributes in dependency order: combinatorics and quadrature first,
    then the oracle, the integral and series representations, and the derived identities, which
    dispatch to all of them. A module may only look up its peers after the Toolkit is built.
    """

    combinatorics: CombinatoricsModule
    quadrature: QuadratureModule
    oracle: OracleModule
    integral_reps: IntegralRepsModule
    series_reps: SeriesRepsModule
    derived: DerivedIdentitiesModule


class ToolkitModule(ABC):
    """Base class of the toolkit's modules.

    Subclasses name themselves, log through stieltjes.modules.<ClassName> and reach the other
    modules through self.mapper.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Human-readable module name."""

    @property
    @abstractmethod
    def help(self) -> str:
        """One line on what the module computes."""

    def __init__(self, mapper: ModuleMapper):
        """Attach the module to the shared mapper and its logger."""
        class_name = self.__class__.__name__
        self.logger = logging.getLogger(f"stieltjes.modules.{class_name}")
        self.logger.debug("Initialising module: %s", class_name)

        self.mapper = mapper
