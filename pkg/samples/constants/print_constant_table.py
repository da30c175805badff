#!/usr/bin/env python3
r"""Stieltjes Toolkit Samples Library.

print_constant_table.py

 ____ ____ _  _ ____ ___ ____ _  _ ___
 |    |  | |\ | [__   |  |__| |\ |  |
 |___ |__| | \| ___]  |  |  | | \|  |

                 ___ ____ ___  _    ____
                  |  |__| |__] |    |___
                  |  |  | |__] |___ |___

Prints gamma_k(a) for k = 0..k_max at one value of a, from every method that
has a representation for each k, next to the oracle value.

Requirements
  stieltjes 0.1.0+
  click
  tabulate
"""
from argparse import ArgumentParser, RawTextHelpFormatter

from click import echo_via_pager
from tabulate import tabulate

from stieltjes import MethodSelector, StieltjesQuery, Toolkit


def print_constant_table():
    """Consume command line arguments, compute the constants, and then display the result."""
    parser = ArgumentParser(description=__doc__, formatter_class=RawTextHelpFormatter)
    parser.add_argument("-a", "--a", type=float, default=1.0, help="Hurwitz parameter a > 0")
    parser.add_argument(
        "-k", "--k_max", type=int, default=3, choices=range(9), help="Largest index k (at most 8)"
    )

    args = parser.parse_args()

    HEADERS = {
        "k": "k",
        "method": "Method",
        "value": "Value",
        "err_estimate": "Error estimate",
        "deviation": "Deviation from oracle",
    }
    queries = [StieltjesQuery(k, args.a) for k in range(args.k_max + 1)]
    rows = []
    with Toolkit() as toolkit:
        grid = toolkit.compute_grid(queries, MethodSelector.VALUES)
        oracle = {
            query.k: result.value
            for (query, sel), result, _ in grid
            if sel == MethodSelector.ORACLE
        }
        for (query, sel), result, _ in grid:
            rows.append(
                {
                    "k": query.k,
                    "method": sel.value,
                    "value": f"{result.value:.15f}",
                    "err_estimate": f"{result.err_estimate:.2e}",
                    "deviation": f"{abs(result.value - oracle[query.k]):.2e}",
                }
            )

    echo_via_pager(tabulate(rows, headers=HEADERS, tablefmt="simple"))


if __name__ == '__main__':
    print_constant_table()
