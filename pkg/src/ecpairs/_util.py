"""Deterministic work partitioning shared by the search and census modules."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def chunks(items: list[T], n: int) -> list[list[T]]:
    """Round-robin split into n lists (order within each list preserved)."""
    return [items[i::n] for i in range(n)] if n > 1 else [items]


def run_chunks(fn: Callable[[list[T]], R], parts: list[list[T]], threads: int) -> list[R]:
    """Apply fn to each part, in a pool when threads > 1; results in part order.

    The merge performed by callers must be associative so the output never
    depends on the worker count.
    """
    if threads <= 1 or len(parts) <= 1:
        return [fn(c) for c in parts]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, parts))
