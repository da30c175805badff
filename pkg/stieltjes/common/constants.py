"""Common constants to be shared throughout the Stieltjes toolkit."""

from enum import Enum, EnumMeta

# Default size of the Stirling number table
DEFAULT_STIRLING_N_MAX = 128

# Hard cap on the number of outer terms of the reordered Stirling series
STIRLING_SERIES_TERM_CAP = 128

# The reordered Stirling series stops at the first outer term smaller than this
STIRLING_TERM_TOL = 1e-12

# Most terms the asymptotic series is searched over for its smallest term
ASYMPTOTIC_TERM_CAP = 1000

# Doublings used when the inner sums of the k-first Stirling series are extrapolated
INNER_SUM_DOUBLINGS = 8

# Quadrature defaults
DEFAULT_POINTS_PER_PANEL = 32
DEFAULT_PANEL_GROWTH = 2.0
DEFAULT_QUADRATURE_TOL = 1e-12
DEFAULT_MAX_PANELS = 64

# Number of times the points per panel may be doubled before giving up
MAX_QUADRATURE_REFINEMENTS = 4

# Oracle defaults
DEFAULT_ORACLE_N_BASE = 5000
DEFAULT_ORACLE_DOUBLINGS = 6
DEFAULT_RICHARDSON_DEPTH = 6

# Largest Stieltjes index the limit-relation oracle will evaluate
ORACLE_K_BUDGET = 8

# Oracle accuracy target
ORACLE_TARGET = 1e-8

# Method accuracy target
METHOD_TARGET = 1e-10

# Chunk size for the oracle's vectorized summation
ORACLE_CHUNK_SIZE = 1 << 20

# Terms used by the digamma reference series
DIGAMMA_SERIES_TERMS = 20000

# Parameter grid of the cross-method validation run
VALIDATION_A_GRID = (0.5, 1.0, 1.5, 2.0, 10.0)

# CLI defaults
DEFAULT_RUN_TOL = 1e-10
DEFAULT_VALIDATE_TOL = 1e-7
DEFAULT_VALIDATE_K_MAX = 4

# Significant digits used whenever a value is printed (round-trip exact for binary64)
PRINT_DIGITS = 17

# CSV header of the table command
TABLE_COLUMNS = ["k", "a", "method", "value", "err_estimate", "work", "seconds"]

# Exit codes
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_NOT_CONVERGED = 2
EXIT_USAGE = 64
EXIT_CANT_CREATE = 73


class MetaEnum(EnumMeta):
    """Overrided class for the use of the in operator and to query for all valid enum values."""

    def __init__(cls, *kwargs):
        """Store all possible values of the Enum subclass."""
        cls.VALUES = [member.value for member in cls.__members__.values()]
        super().__init__(kwargs)

    def __contains__(cls: Enum, item: str) -> bool:
        """Override the __contains__ method to use the in operator with Enum subclasses."""
        return item in cls.VALUES


class MethodSelector(Enum, metaclass=MetaEnum):
    """
    Stieltjes constant producer class.

    Enum class naming which producer computes gamma_k(a). Valid tags are 'hermite',
    'u_integral', 'stirling', 'asymptotic' and 'oracle'.
    """

    HERMITE = "hermite"
    U_INTEGRAL = "u_integral"
    STIRLING = "stirling"
    ASYMPTOTIC = "asymptotic"
    ORACLE = "oracle"

    def __eq__(self, item) -> bool:
        """Compare against either another selector or the string value of a tag."""
        if isinstance(item, MethodSelector):
            return self.value == item.value
        return str(self.value) == item

    def __hash__(self) -> int:
        """Hash by tag so that selectors can key dictionaries next to their string values."""
        return hash(self.value)

    def __lt__(self, other: "MethodSelector") -> bool:
        """Order selectors by tag so that tables sort deterministically."""
        return self.value < other.value

    @classmethod
    def parse(cls, tag) -> "MethodSelector":
        """Return the selector for a tag, or raise UnknownMethod."""
        # Imported here as the exceptions module imports this one
        from stieltjes.common.exceptions import (  # pylint: disable=import-outside-toplevel
            UnknownMethod,
        )

        if isinstance(tag, cls):
            return tag
        if tag not in cls:
            raise UnknownMethod(tag, cls.VALUES)
        return cls(tag)
