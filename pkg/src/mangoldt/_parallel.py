"""Order-preserving parallel map over read-only tables.

Workers only ever read shared sieve/character tables, and results are
collected in input order before any reduction, so the worker count never
changes an output bit.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    seq: Sequence[T] = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(seq) <= 1:
        return [fn(it) for it in seq]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seq))
