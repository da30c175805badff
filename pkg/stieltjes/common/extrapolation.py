"""Richardson extrapolation over doubling sequences with logarithmic error terms.

A sequence T(N) evaluated at N, 2N, 4N, ... whose error is sum_{p >= first_power} N^-p P_p(ln N),
with each P_p a polynomial of degree log_degree, is accelerated column by column. One
combination with ratio 2^p lowers the degree of the N^-p polynomial by one, so each power
takes log_degree + 1 columns before the next power is attacked.
"""

from typing import List, Sequence

import numpy as np

# Differences below this many ulps of the value are rounding noise
NOISE_ULPS = 64


def richardson_table(
    sequence: Sequence[float],
    log_degree: int,
    depth: int,
    first_power: int = 2,
) -> List[List[float]]:
    """Return the extrapolation table of a doubling sequence.

    Entry table[i][m] combines table[i][m - 1] and table[i + 1][m - 1], so row i holds
    columns 0..min(depth, len(sequence) - 1 - i).
    """
    table = [[value] for value in sequence]
    for m in range(1, depth + 1):
        ratio = 2.0 ** (first_power + (m - 1) // (log_degree + 1))
        for i in range(len(sequence) - m):
            table[i].append((ratio * table[i + 1][m - 1] - table[i][m - 1]) / (ratio - 1.0))
    return table


def is_low_confidence(diagonal: Sequence[float], value: float) -> bool:
    """Flag a diagonal whose last corrections grow before reaching rounding noise."""
    noise = NOISE_ULPS * np.finfo(np.float64).eps * max(1.0, abs(value))
    deltas = [abs(later - earlier) for earlier, later in zip(diagonal, diagonal[1:])]
    tail = [delta for delta in deltas[-3:] if delta > noise]
    return any(later > earlier for earlier, later in zip(tail, tail[1:]))
