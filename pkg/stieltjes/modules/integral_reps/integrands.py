"""Vectorized integrands of the integral representations, with their endpoint limits.

For real a the integrands of every representation pair each complex term with its conjugate,
so the production forms take twice the real (or imaginary) part of a single principal-branch
term. The literal forms evaluate both terms exactly as written and return the complex bracket;
its imaginary part is zero up to rounding and is reported, not discarded.

Unit-interval integrands are written as numerators h(L) of h(L) / u, L = ln(1 - u), as the
quadrature module expects; with L = -v, z = a + i v / (2 pi) lies in the right half-plane.
"""

import math
from typing import Callable

import numpy as np

TWO_PI = 2.0 * math.pi

ArrayFunction = Callable[[np.ndarray], np.ndarray]


def hermite_integrand(k: int, a: float) -> ArrayFunction:
    """Return y -> 2 Re[(y/a + i) ln^k(a + iy)] / ((1 + y^2/a^2) expm1(2 pi y))."""

    def integrand(y: np.ndarray) -> np.ndarray:
        log_z = np.log(a + 1j * y)
        bracket = 2.0 * np.real((y / a + 1j) * log_z**k)
        return bracket / ((1.0 + (y / a) ** 2) * np.expm1(TWO_PI * y))

    return integrand


def hermite_integrand_literal(k: int, a: float) -> ArrayFunction:
    """Return the complex integrand with both conjugate terms evaluated separately."""

    def integrand(y: np.ndarray) -> np.ndarray:
        lower = (y / a - 1j) * np.log(a - 1j * y) ** k
        upper = (y / a + 1j) * np.log(a + 1j * y) ** k
        bracket = lower + upper
        return bracket / ((1.0 + (y / a) ** 2) * np.expm1(TWO_PI * y))

    return integrand


def hermite_integrand_limit(k: int, a: float) -> float:
    """Return the limit of hermite_integrand as y -> 0+: (ln^k a - k ln^(k-1) a) / (pi a)."""
    log_a = math.log(a)
    numerator = log_a**k
    if k > 0:
        numerator -= k * log_a ** (k - 1)
    return numerator / (math.pi * a)


def gamma0_numerator(a: float) -> ArrayFunction:
    """Return h(L) = w / (pi a (1 + w^2)) with w = -L / (2 pi a)."""

    def numerator(log_one_minus_u: np.ndarray) -> np.ndarray:
        w = -log_one_minus_u / (TWO_PI * a)
        return w / (math.pi * a * (1.0 + w**2))

    return numerator


def gamma0_numerator_literal(a: float) -> ArrayFunction:
    """Return h(L) = [1 / (1 - L/(2 pi i a)) - 1 / (1 + L/(2 pi i a))] / (2 pi i a)."""

    def numerator(log_one_minus_u: np.ndarray) -> np.ndarray:
        t = log_one_minus_u / (TWO_PI * 1j * a)
        return (1.0 / (1.0 - t) - 1.0 / (1.0 + t)) / (TWO_PI * 1j * a)

    return numerator


def gamma0_integrand_limit(a: float) -> float:
    """Return the v -> 0+ limit of the transformed gamma_0 integrand: 1 / (2 pi^2 a^2)."""
    return 1.0 / (2.0 * math.pi**2 * a**2)


def gamma_m_numerator(m: int, a: float) -> ArrayFunction:
    """Return h(L) = -Im[ln^m(z) / z] / pi with z = a - i L / (2 pi)."""

    def numerator(log_one_minus_u: np.ndarray) -> np.ndarray:
        z = a - 1j * log_one_minus_u / TWO_PI
        return -np.imag(np.log(z) ** m / z) / math.pi

    return numerator


def gamma_m_numerator_literal(m: int, a: float) -> ArrayFunction:
    """Return h(L) = [g(a - L/(2 pi i)) - g(a + L/(2 pi i))] / (2 pi i), g(z) = ln^m(z) / z."""

    def numerator(log_one_minus_u: np.ndarray) -> np.ndarray:
        shift = log_one_minus_u / (TWO_PI * 1j)
        lower, upper = a - shift, a + shift
        return (np.log(lower) ** m / lower - np.log(upper) ** m / upper) / (TWO_PI * 1j)

    return numerator


def gamma_m_integrand_limit(m: int, a: float) -> float:
    """Return the v -> 0+ limit of the transformed gamma_m integrand.

    The limit is (ln^m a - m ln^(m-1) a) / (2 pi^2 a^2).
    """
    log_a = math.log(a)
    numerator = log_a**m
    if m > 0:
        numerator -= m * log_a ** (m - 1)
    return numerator / (2.0 * math.pi**2 * a**2)
