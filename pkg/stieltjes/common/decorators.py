"""Stieltjes toolkit module-agnostic decorators."""

import math
import numbers
from functools import wraps
from inspect import signature
from typing import Callable, Optional

from stieltjes.common.exceptions import DomainError


def _bound_arguments(func: Callable, parameter: str):
    """Load a function's signature and confirm that the parameter to check exists."""
    sig = signature(func)
    if parameter not in sig.parameters:
        raise ValueError(f"The function {func.__name__} does not have a {parameter} parameter")
    return sig


def _debug(args, message: str, *params):
    """Log through the bound object's logger, if the decorated function is a method."""
    self = args.arguments.get("self")
    if self is not None and hasattr(self, "logger"):
        self.logger.debug(message, *params)


def positive_parameter(parameter: str = "a") -> Callable:
    """Decorate a function to ensure that the named argument is a finite, positive real."""

    def decorator(func: Callable):
        sig = _bound_arguments(func, parameter)

        @wraps(func)
        def wrapper(*args, **kwargs):
            # Load in the arguments passed to the function and bind them to the function's signature
            _args = sig.bind(*args, **kwargs)
            # Apply any default parameters
            _args.apply_defaults()
            value = _args.arguments[parameter]

            _debug(_args, "Checking %s=%r for %s", parameter, value, func.__name__)

            if (
                isinstance(value, bool)
                or not isinstance(value, numbers.Real)
                or not math.isfinite(value)
                or value <= 0
            ):
                raise DomainError(parameter, value, "must be a finite real greater than zero")

            return func(*_args.args, **_args.kwargs)

        return wrapper

    return decorator


def index_check(parameter: str = "k", minimum: int = 0, budget: Optional[int] = None) -> Callable:
    """Decorate a function to ensure that the named argument is an integer index in range.

    Arguments
    ---------
    parameter: str
        Name of the argument to check.
    minimum: int
        Smallest permitted value.
    budget: int, optional
        Largest permitted value. Callers that need a dedicated error for exceeding the
        budget (such as the oracle) leave this unset and check it themselves.
    """

    def decorator(func: Callable):
        sig = _bound_arguments(func, parameter)

        @wraps(func)
        def wrapper(*args, **kwargs):
            _args = sig.bind(*args, **kwargs)
            _args.apply_defaults()
            value = _args.arguments[parameter]

            _debug(_args, "Checking %s=%r for %s", parameter, value, func.__name__)

            if value is None:
                # Unset optional indices fall back to the callee's own default
                return func(*_args.args, **_args.kwargs)

            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise DomainError(parameter, value, "must be an integer")
            if value < minimum:
                raise DomainError(parameter, value, f"must be at least {minimum}")
            if budget is not None and value > budget:
                raise DomainError(parameter, value, f"must be at most {budget}")

            return func(*_args.args, **_args.kwargs)

        return wrapper

    return decorator
