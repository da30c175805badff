"""Stieltjes toolkit: Common functions and data imports."""

__all__ = [
    "ComputedValue",
    "MethodSelector",
    "StieltjesQuery",
    "ToolkitModule",
]

from stieltjes.common.constants import MethodSelector
from stieltjes.common.module import ToolkitModule
from stieltjes.common.values import ComputedValue, StieltjesQuery
