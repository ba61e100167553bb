"""Range partitioning and optional process-parallel mapping for sweeps.

Results are always returned in chunk order, so the merged output does not
depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def partition(start: int, stop: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[start, stop)`` into at most ``parts`` contiguous ranges."""
    parts = max(1, min(parts, stop - start)) if stop > start else 1
    size, extra = divmod(stop - start, parts)
    out = []
    lo = start
    for p in range(parts):
        hi = lo + size + (1 if p < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def run_chunks(func: Callable, chunks: Sequence, jobs: int = 1) -> list:
    if jobs <= 1 or len(chunks) <= 1:
        return [func(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, chunks))
