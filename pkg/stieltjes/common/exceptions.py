"""Stieltjes toolkit exceptions."""

from typing import Dict, List, Sequence

from stieltjes.common.constants import ORACLE_K_BUDGET


class BaseStieltjesError(Exception):
    """Base exception class from which all other exceptions inherit."""


class ComputationError(BaseStieltjesError):
    """A generic error raised while setting up or running a computation."""

    def __init__(self, errors: List[Dict] = None):
        """Construct an instance of the ComputationError class."""
        self.errors = [{"code": 500, "message": "An unexpected error has occurred"}]
        if errors:
            self.errors = errors
        super().__init__(self.errors)

    def __str__(self):
        """Return all errors as a comma-delimited list."""
        return ", ".join([f"[{x['code']}] {x['message']}" for x in self.errors])

    def __int__(self):
        """Return the first error code as an integer."""
        return int(self.errors[0]["code"])

    def __float__(self):
        """Return the first error code as a float."""
        return float(self.errors[0]["code"])


class CapacityExceeded(ComputationError):
    """A table was asked for an entry beyond its configured size."""

    def __init__(self, requested: int, limit: int, what: str = "n"):
        """Construct an instance of the CapacityExceeded class."""
        self.requested = requested
        self.limit = limit
        self.errors = [
            {
                "code": 413,
                "message": f"Requested {what}={requested} exceeds the configured limit {limit}",
            }
        ]
        super().__init__(self.errors)


class UnsupportedOrder(ComputationError):
    """An order or index has no implemented representation."""

    def __init__(self, order: int, supported: str):
        """Construct an instance of the UnsupportedOrder class."""
        self.errors = [
            {
                "code": 422,
                "message": f"Order {order} is not supported. Supported: {supported}",
            }
        ]
        super().__init__(self.errors)


class ExcludedPoint(ComputationError):
    """The argument sits on a point the formula excludes."""

    def __init__(self, name: str, value: float):
        """Construct an instance of the ExcludedPoint class."""
        self.errors = [
            {
                "code": 422,
                "message": f"The point {name}={value} is excluded from this formula",
            }
        ]
        super().__init__(self.errors)


class DomainError(ComputationError):
    """An argument lies outside the domain of the operation."""

    def __init__(self, name: str, value, requirement: str):
        """Construct an instance of the DomainError class."""
        self.errors = [
            {
                "code": 400,
                "message": f"Invalid argument {name}={value!r}: {requirement}",
            }
        ]
        super().__init__(self.errors)


class OutOfBudget(ComputationError):
    """The limit-relation oracle was asked for an index beyond its accuracy budget."""

    def __init__(self, k: int):
        """Construct an instance of the OutOfBudget class."""
        self.errors = [
            {
                "code": 416,
                "message": f"The oracle supports k <= {ORACLE_K_BUDGET}; k={k} was requested",
            }
        ]
        super().__init__(self.errors)


class UnknownMethod(ComputationError):
    """A method or psi source tag is not recognised."""

    def __init__(self, tag, valid: Sequence[str]):
        """Construct an instance of the UnknownMethod class."""
        self.errors = [
            {
                "code": 404,
                "message": f"Unknown method '{tag}'. Expected one of {list(valid)}.",
            }
        ]
        super().__init__(self.errors)


class InvalidConfiguration(ComputationError):
    """A configuration object violates one of its invariants."""

    def __init__(self, message: str):
        """Construct an instance of the InvalidConfiguration class."""
        self.errors = [{"code": 400, "message": message}]
        super().__init__(self.errors)


class QuadratureError(ComputationError):
    """An integrand returned non-finite values and no limiting value was supplied."""

    def __init__(self, count: int):
        """Construct an instance of the QuadratureError class."""
        self.errors = [
            {
                "code": 500,
                "message": f"The integrand returned {count} non-finite values "
                "and no endpoint limit was supplied",
            }
        ]
        super().__init__(self.errors)
