"""Stieltjes toolkit batching support.

This module contains all the required code to generically parallelise evaluation of a grid of
independent computations, such as every (k, a, method) point of a validation run.

Each grid point is evaluated by a pure, reentrant function, so workers share nothing. Results are
always handed back in the order of the input list, whatever order the threads finish in, so that
anything assembled from them (tables, reports) is deterministic.
"""

import concurrent.futures
import logging
import multiprocessing
from functools import partial
from threading import current_thread
from time import perf_counter
from typing import Callable, List, Sequence, Tuple, TypeVar

BATCH_LOGGER = logging.getLogger(__name__)

_P = TypeVar("_P")
_R = TypeVar("_R")


def batch_compute_threads() -> int:
    """
    Return maximum number of threads to spin up in a thread pool.

    Result is either 8, or the number of cores, whichever is smallest.
    """
    cores = multiprocessing.cpu_count()
    thread_count = max(1, min(cores, 8))
    BATCH_LOGGER.debug("Will use up to %d threads for grid evaluation", thread_count)
    return thread_count


def batch_evaluate(
    points: Sequence[_P],
    func: Callable[[_P], _R],
    threads: int = None,
) -> List[Tuple[_R, float]]:
    """Evaluate func at every grid point, in parallel.

    Arguments
    ---------
    points: list
        Grid points; each one is passed to func as its only argument.
    func: Python function, object
        Function to call for each point.
    threads: int, optional
        Size of the thread pool. Defaults to batch_compute_threads().

    Returns
    -------
    list: One (result, seconds) tuple per point, in input order.
    """
    BATCH_LOGGER.info("Batch evaluation of %s (%d points)", func.__name__, len(points))

    if threads is None:
        threads = batch_compute_threads()

    def worker(point_func: Callable[[_P], _R], point: _P) -> Tuple[_R, float]:
        """Inline worker thread that evaluates one grid point and times it."""
        thread_name = current_thread().name
        BATCH_LOGGER.debug("%s | Evaluating %s", thread_name, point)
        started = perf_counter()
        result = point_func(point)
        elapsed = perf_counter() - started
        BATCH_LOGGER.debug("%s | Finished %s in %.3fs", thread_name, point, elapsed)
        return result, elapsed

    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        partial_worker = partial(worker, func)
        # executor.map yields in submission order, which keeps assembly deterministic
        completed = list(executor.map(partial_worker, points))

    BATCH_LOGGER.debug("Completed %d grid points", len(completed))
    return completed
