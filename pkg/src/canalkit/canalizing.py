"""Definitional canalization tests, censuses and generation by concatenation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Iterable, NamedTuple

import numpy as np

from . import bf
from ._sweep import partition, run_chunks
from .bf import TruthTable

CENSUS_MAX_ARITY = 4
# the vectorised test packs a table into one uint64
_VECTOR_MAX_ARITY = 6


class CanalizingTriple(NamedTuple):
    variable: int
    input: int
    output: int


@dataclass(frozen=True)
class GenerationStats:
    source_count: int
    checks_performed: int
    emitted_free: int
    result_count: int

    @property
    def check_bound(self) -> int:
        x = self.source_count - 2
        return x * x - x


@lru_cache(maxsize=None)
def _masks(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((i, a, bf.var_mask(n, i, a)) for i in range(1, n + 1) for a in (0, 1))


def canalizing_triples(f: TruthTable) -> list[CanalizingTriple]:
    """All ``(i, a, b)`` with ``f|x_i=a`` constant ``b``, ordered by ``(i, a)``."""
    v = f.value
    out = []
    for i, a, m in _masks(f.arity):
        s = v & m
        if s == 0:
            out.append(CanalizingTriple(i, a, 0))
        elif s == m:
            out.append(CanalizingTriple(i, a, 1))
    return out


def is_canalizing(f: TruthTable) -> bool:
    v = f.value
    for _, _, m in _masks(f.arity):
        s = v & m
        if s == 0 or s == m:
            return True
    return False


def triple_signature(f: TruthTable) -> int:
    """Bitset of the canalizing triples of ``f``; bit ``4(i-1) + 2a + b``."""
    sig = 0
    for i, a, b in canalizing_triples(f):
        sig |= 1 << (4 * (i - 1) + 2 * a + b)
    return sig


def is_canalizing_many(values: np.ndarray, n: int, variables: Iterable[int] | None = None) -> np.ndarray:
    """Vectorised definitional test over an array of ``n``-variable codes.

    ``variables`` restricts which variables may canalize (default: all).
    """
    if n > _VECTOR_MAX_ARITY:
        raise ValueError(f"vectorised test supports arity <= {_VECTOR_MAX_ARITY}")
    vals = np.asarray(values, dtype=np.uint64)
    allowed = set(range(1, n + 1)) if variables is None else set(variables)
    hit = np.zeros(vals.shape, dtype=bool)
    for i, _, m in _masks(n):
        if i not in allowed:
            continue
        m64 = np.uint64(m)
        s = vals & m64
        hit |= (s == 0) | (s == m64)
    return hit


# ---------------------------------------------------------------------------
# Censuses
# ---------------------------------------------------------------------------

def _census_chunk(bounds: tuple[int, int], n: int) -> list[int]:
    lo, hi = bounds
    vals = np.arange(lo, hi, dtype=np.uint64)
    return vals[is_canalizing_many(vals, n)].tolist()


def canalizing_set(n: int, jobs: int = 1) -> list[TruthTable]:
    """Every canalizing ``n``-variable function, in integer order (n <= 4)."""
    if n > CENSUS_MAX_ARITY:
        raise ValueError(f"exhaustive census refused for n={n} > {CENSUS_MAX_ARITY}; use generate_next")
    if n < 1:
        raise ValueError("arity must be >= 1")
    chunks = partition(0, 1 << (1 << n), max(jobs, 1) * 4)
    parts = run_chunks(partial(_census_chunk, n=n), chunks, jobs)
    return [TruthTable(n, v) for part in parts for v in part]


def census_canalizing(n: int, jobs: int = 1) -> int:
    return len(canalizing_set(n, jobs))


# ---------------------------------------------------------------------------
# Concatenation counting (single-minority-bit functions)
# ---------------------------------------------------------------------------

def distance1_extension_formula(n: int) -> int:
    """Canalizing extensions of a distance-1 function, both sides combined.

    ``2 * sum_{x=1..n} C(n, x) * 2^(2^n / 2^x) * (-1)^(x-1)``
    """
    size = 1 << n
    return 2 * sum(
        math.comb(n, x) * (1 << (size >> x)) * (-1) ** (x - 1) for x in range(1, n + 1)
    )


def distance1_extension_count(f: TruthTable) -> int:
    """Brute-force count of ``g`` (left or right of ``f``) giving a canalizing concatenation.

    Only canalization through one of the original ``n`` variables counts.
    """
    if bf.min_const_hd(f) != 1:
        raise ValueError("distance1_extension_count needs a function at Hamming distance 1 from a constant")
    n = f.arity
    original = range(2, n + 2)
    count = 0
    for g in bf.enumerate_all(n):
        for h in (bf.concat(f, g), bf.concat(g, f)):
            if any(t.variable in original for t in canalizing_triples(h)):
                count += 1
    return count


# ---------------------------------------------------------------------------
# Generating C_{n+1} from C_n
# ---------------------------------------------------------------------------

def _pair_chunk(bounds: tuple[int, int], core: tuple[int, ...], n: int) -> tuple[list[int], int]:
    lo, hi = bounds
    size = 1 << n
    full = bf.full_mask(n)
    # only the original variables can canalize: neither half is constant
    original = range(2, n + 2)
    found: set[int] = set()
    checks = 0
    if n + 1 <= _VECTOR_MAX_ARITY:
        gs = np.asarray(core, dtype=np.uint64)
        for f in core[lo:hi]:
            keep = (gs != np.uint64(f)) & (gs != np.uint64(f ^ full))
            cand = gs[keep]
            checks += int(cand.size)
            h = np.uint64(f) | (cand << np.uint64(size))
            found.update(h[is_canalizing_many(h, n + 1, original)].tolist())
    else:
        for f in core[lo:hi]:
            for g in core:
                if g == f or g == f ^ full:
                    continue
                checks += 1
                h = TruthTable(n + 1, f | g << size)
                if any(t.variable != 1 for t in canalizing_triples(h)):
                    found.add(h.value)
    return sorted(found), checks


def generate_next(functions: Iterable[TruthTable], jobs: int = 1) -> tuple[set[TruthTable], GenerationStats]:
    """Build every canalizing ``(n+1)``-variable function from the canalizing set ``C_n``.

    Concatenations with a constant half and ``ff`` are emitted untested,
    ``f f'`` is skipped, and the remaining ordered pairs of non-constant
    canalizing functions are tested.
    """
    src = sorted({f.value for f in functions})
    arities = {f.arity for f in functions}
    if len(arities) != 1:
        raise ValueError("input must be a non-empty set of functions of one arity")
    (n,) = arities
    size = 1 << n
    full = bf.full_mask(n)

    result: set[int] = set()
    emitted = 0
    for c in (0, full):
        for g in range(1 << size):
            result.add(c | g << size)
            result.add(g | c << size)
            emitted += 2
    for f in src:
        result.add(f | f << size)
        emitted += 1

    core = tuple(v for v in src if v not in (0, full))
    chunks = partition(0, len(core), max(jobs, 1) * 4)
    parts = run_chunks(partial(_pair_chunk, core=core, n=n), chunks, jobs)
    checks = 0
    for found, k in parts:
        result.update(found)
        checks += k

    out = {TruthTable(n + 1, v) for v in result}
    stats = GenerationStats(
        source_count=len(src),
        checks_performed=checks,
        emitted_free=emitted,
        result_count=len(out),
    )
    return out, stats
