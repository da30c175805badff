"""Term generators for the Stirling and asymptotic series of the Stieltjes constants.

With c = 1 / (2 pi a), the series all weight Stirling numbers s(n, 2k+1) by (2k+1)! c^(2k+1).
Those weights are built by incremental ratio and the Stirling numbers are read from the scaled
table, so neither factorials nor Stirling numbers are ever formed on their own.
"""

import math
from itertools import count
from typing import Iterator, List, Sequence

import numpy as np

from stieltjes.common.extrapolation import richardson_table
from stieltjes.modules.combinatorics import StirlingTable
from stieltjes.modules.oracle import zeta_int


def odd_factorial_weights(c: float, terms: int) -> np.ndarray:
    """Return (2k+1)! c^(2k+1) for k = 0..terms-1."""
    weights = np.empty(terms, dtype=np.float64)
    weight = c
    for k in range(terms):
        weights[k] = weight
        weight *= (2 * k + 2) * (2 * k + 3) * c * c
    return weights


def odd_columns(table: StirlingTable, n_stop: int) -> np.ndarray:
    """Return t(n, 2k+1) for n = 1..n_stop (rows) and 2k+1 <= n_stop (columns)."""
    return table.scaled[1 : n_stop + 1, 1 : n_stop + 1 : 2]


def stirling_outer_terms(columns: np.ndarray, weights: Sequence[float]) -> np.ndarray:
    """Return (1/n) sum_k weights[k] columns[n, k] for each row n = 1..N, summed compensated."""
    products = columns * np.asarray(weights)[: columns.shape[1]]
    inner = np.array([math.fsum(row) for row in products])
    return inner / np.arange(1, columns.shape[0] + 1, dtype=np.float64)


def asymptotic_terms(a: float) -> Iterator[float]:
    """Yield (-1)^n (2n+1)! zeta(2n+2) / (2 pi a)^(2n) for n = 0, 1, 2, ..."""
    scale = (2.0 * math.pi * a) ** 2
    coefficient = 1.0
    for n in count():
        yield (-1) ** n * coefficient * zeta_int(2 * n + 2)
        coefficient *= (2 * n + 2) * (2 * n + 3) / scale


def smallest_term_index(terms: Sequence[float]) -> int:
    """Return the index of the smallest-magnitude term, the first one on ties."""
    magnitudes = [abs(term) for term in terms]
    return magnitudes.index(min(magnitudes))


def inner_sum_sequence(table: StirlingTable, k: int, checkpoints: Sequence[int]) -> List[float]:
    """Return sum_{n=1..N} t(n, 2k+1) (-1)^n / n at each checkpoint N."""
    column = table.column(2 * k + 1, checkpoints[-1])
    n = np.arange(len(column), dtype=np.float64)
    n[0] = 1.0
    signed = column * np.where(np.arange(len(column)) % 2, -1.0, 1.0) / n
    signed[0] = 0.0

    sequence = []
    segments = []
    previous = 0
    for stop in checkpoints:
        segments.append(math.fsum(signed[previous + 1 : stop + 1]))
        sequence.append(math.fsum(segments))
        previous = stop
    return sequence


def extrapolated_inner_sum(table: StirlingTable, k: int, n_stop: int, doublings: int) -> float:
    """Extrapolate the k-th inner sum over N = N_0, 2 N_0, ..., 2^doublings N_0 <= n_stop.

    N_0 is n_stop // 2^doublings, so the last checkpoint is n_stop rounded down to a multiple of
    2^doublings. The tail of the inner sum behaves like sum_{p >= 1} N^-p P_p(ln N), with each
    P_p of degree 2k.
    """
    base = n_stop >> doublings
    checkpoints = [base << i for i in range(doublings + 1)]
    sequence = inner_sum_sequence(table, k, checkpoints)
    extrapolated = richardson_table(sequence, log_degree=2 * k, depth=doublings, first_power=1)
    return extrapolated[0][doublings]
