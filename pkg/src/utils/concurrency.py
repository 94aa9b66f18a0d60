"""
Ordered Parallel Map
====================

This module provides the single concurrency primitive netgroups needs: apply
a function to a list of independent work items and return the results in
input order.

Hill-climbing restarts, Erdos-Renyi replicas and pipeline runs are all
embarrassingly parallel. Each work item already carries its own seed, so the
only thing the executor must guarantee is that the reduction sees results in
submission order; completion order is irrelevant.

- `max_workers <= 1` runs serially in the calling thread (the default, and
  the easiest mode to debug).
- Threads suit numpy-heavy inner loops (restarts, replicas).
- Processes suit coarse, pickle-friendly jobs (whole pipeline runs).
"""

import logging
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    max_workers: Optional[int] = 1,
    use_processes: bool = False,
    on_result: Optional[Callable[[int, R], None]] = None,
) -> List[R]:
    """
    Map `fn` over `items`, returning results in input order.

    Args:
        fn: Callable applied to each item. Must be picklable when
            `use_processes` is True.
        items: Work items.
        max_workers: Degree of parallelism; None or <= 1 means serial.
        use_processes: Use a process pool instead of a thread pool.
        on_result: Optional callback invoked as each result becomes
            available, with its input index.

    Returns:
        List of results, one per item, in the order of `items`.
    """
    work = list(items)
    if not work:
        return []

    if max_workers is None or max_workers <= 1 or len(work) == 1:
        results = []
        for index, item in enumerate(work):
            result = fn(item)
            if on_result is not None:
                on_result(index, result)
            results.append(result)
        return results

    workers = min(max_workers, len(work))
    pool_cls = ProcessPoolExecutor if use_processes else ThreadPoolExecutor
    logger.debug(f"Dispatching {len(work)} items to {workers} {pool_cls.__name__} workers")

    with pool_cls(max_workers=workers) as executor:
        return _collect(executor, fn, work, on_result)


def _collect(
    executor: Executor,
    fn: Callable[[T], R],
    work: List[T],
    on_result: Optional[Callable[[int, R], None]],
) -> List[R]:
    futures = [executor.submit(fn, item) for item in work]
    results: List[R] = []
    # Waiting in submission order keeps the reduction deterministic
    for index, future in enumerate(futures):
        result = future.result()
        if on_result is not None:
            on_result(index, result)
        results.append(result)
    return results
