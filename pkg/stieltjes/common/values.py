"""Value types shared by every producer of Stieltjes constants."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from typing import Any, Dict

from stieltjes.common.constants import MethodSelector
from stieltjes.common.exceptions import DomainError


@dataclass(frozen=True)
class StieltjesQuery:
    """The pair (k, a) identifying gamma_k(a).

    `k` is the Stieltjes index (the m of the higher-order integral representation) and
    `a` the Hurwitz parameter.
    """

    k: int
    a: float

    def __post_init__(self):
        """Enforce k >= 0 and a finite and > 0."""
        if isinstance(self.k, bool) or not isinstance(self.k, numbers.Integral) or self.k < 0:
            raise DomainError("k", self.k, "must be a non-negative integer")
        if not self.a > 0 or not math.isfinite(self.a):
            raise DomainError("a", self.a, "must be a finite real greater than zero")


@dataclass(frozen=True)
class ComputedValue:
    """A numeric result with its error estimate, producing method and work diagnostics."""

    value: float
    err_estimate: float
    method: MethodSelector
    work: int
    converged: bool
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __repr__(self):
        """Return an unambiguous representation with the method tag and value."""
        return (
            f"<{self.__class__.__name__}(method={self.method.value!r}, value={self.value!r}, "
            f"err_estimate={self.err_estimate!r}, work={self.work}, converged={self.converged})>"
        )

    def dump(self) -> Dict[str, Any]:
        """Return a JSON-serialisable dictionary with a stable key order."""
        return {
            "value": self.value,
            "err_estimate": self.err_estimate,
            "method": self.method.value,
            "work": self.work,
            "converged": self.converged,
        }
