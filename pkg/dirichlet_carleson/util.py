"""Small helpers shared by the scan and verification code."""
from __future__ import annotations

import concurrent.futures
from typing import Callable, Iterable, List, Optional, TypeVar

from . import config

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> List[R]:
    """Map ``func`` over ``items``, results in input order.

    Uses a thread pool when ``workers`` (default ``Settings.workers``) is
    greater than one. Results are collected in submission order so that
    downstream reductions do not depend on the worker count.
    """
    items = list(items)
    workers = config.get_settings().workers if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def dyadic_levels(k_min: int, k_max: int):
    """Return the pairs (k, 2^{-k}) for k_min ≤ k ≤ k_max."""
    return [(k, 2.0 ** -k) for k in range(k_min, k_max + 1)]
