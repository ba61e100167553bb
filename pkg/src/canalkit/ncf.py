"""Nested canalizing functions: chains, enumeration by merger, and the H.D matrix."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import bf
from .bf import TruthTable
from .canalizing import CanalizingTriple, canalizing_triples


@dataclass(frozen=True)
class NestedChain:
    """Ordered canalizing steps ``(variable, input, output)`` in original indices."""

    entries: tuple[CanalizingTriple, ...]
    complete: bool = False

    def __len__(self):
        return len(self.entries)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(t.variable for t in self.entries)


# Chains are searched on (arity, value) pairs and returned in local
# variable numbering; callers map back to original indices.

@lru_cache(maxsize=None)
def _ncf_local(n: int, v: int) -> tuple[tuple[int, int, int], ...] | None:
    f = TruthTable(n, v)
    if n == 1:
        # x -> (1,0,0), not x -> (1,0,1); the else branch is the complement
        if v == 0b10:
            return ((1, 0, 0),)
        if v == 0b01:
            return ((1, 0, 1),)
        return None
    if bf.is_constant(f):
        return None
    for i, a, b in canalizing_triples(f):
        rest = bf.cofactor(f, i, 1 - a)
        sub = _ncf_local(n - 1, rest.value)
        if sub is not None:
            return ((i, a, b),) + tuple((j + (j >= i), aa, bb) for j, aa, bb in sub)
    return None


def ncf_chain(f: TruthTable) -> NestedChain | None:
    """Canonical complete chain of ``f``, or None if ``f`` is not nested canalizing.

    At every step the smallest variable index is tried first, then input 0.
    """
    if f.arity == 0:
        return None
    local = _ncf_local(f.arity, f.value)
    if local is None:
        return None
    return NestedChain(tuple(CanalizingTriple(*t) for t in local), complete=True)


def evaluate_chain(chain: NestedChain, n: int, assignment) -> int:
    """Evaluate the nested if-then-else form of a complete chain."""
    for t in chain.entries:
        if assignment[t.variable - 1] == t.input:
            return t.output
    return 1 - chain.entries[-1].output


def is_ncf(f: TruthTable) -> bool:
    return ncf_chain(f) is not None


@lru_cache(maxsize=None)
def _ncf_values(n: int) -> frozenset[int]:
    if n == 1:
        return frozenset((0b01, 0b10))
    out = set()
    for g in _ncf_values(n - 1):
        gt = TruthTable(n - 1, g)
        for i in range(1, n + 1):
            for a in (0, 1):
                for c in (0, 1):
                    out.add(bf.merge(gt, i, a, c).value)
    return frozenset(out)


def enumerate_ncf(n: int) -> set[TruthTable]:
    """All ``n``-variable NCFs, built by merging a new variable into NCF(n-1)."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    return {TruthTable(n, v) for v in _ncf_values(n)}


# ---------------------------------------------------------------------------
# H.D matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HDMatrix:
    """Counts ``M[i][j]`` by start variable ``x_i`` and H.D ``2j - 1`` (1-based).

    ``rows`` holds the matrix as a tuple of row tuples, zero-based.
    """

    arity: int
    rows: tuple[tuple[int, ...], ...]
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", 4 * sum(map(sum, self.rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    @property
    def n_c(self) -> int:
        return self.total

    @property
    def columns(self) -> int:
        return len(self.rows[0])

    @property
    def hd_labels(self) -> list[int]:
        return [2 * j - 1 for j in range(1, self.columns + 1)]

    def column_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.rows)]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@lru_cache(maxsize=None)
def _hd_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 2:
        return ((2,), (0,))
    prev = _hd_rows(n - 1)
    cols = 1 << (n - 2)
    half = 1 << (n - 3)
    m = [[0] * cols for _ in range(n)]
    for j in range(1, half + 1):
        for i in range(1, n):
            m[i - 1][j - 1] = 2 * sum(prev[i1 - 1][j - 1] for i1 in range(i, n))
        # m[n][j] stays 0
    for j in range(half + 1, cols + 1):
        mirror = m[0][cols - j]
        for i in range(n):
            m[i][j - 1] = mirror
    return tuple(tuple(r) for r in m)


def hd_matrix(n: int) -> HDMatrix:
    """The recursive start-variable / H.D count matrix ``M_n`` and ``N_c = 4 * sum(M_n)``."""
    if n < 2:
        raise ValueError("hd_matrix needs n >= 2")
    return HDMatrix(n, _hd_rows(n))


def start_variable(f: TruthTable) -> int | None:
    """Smallest variable that begins some complete chain of ``f``."""
    chain = ncf_chain(f)
    return chain.entries[0].variable if chain else None


def hd_histogram(n: int) -> dict[tuple[int, int], int]:
    """Bucket every NCF by (start variable, H.D class ``j``); all cells present."""
    if n < 2:
        raise ValueError("hd_histogram needs n >= 2")
    cols = 1 << (n - 2)
    hist = {(i, j): 0 for i in range(1, n + 1) for j in range(1, cols + 1)}
    for f in enumerate_ncf(n):
        i = start_variable(f)
        j = (bf.min_const_hd(f) + 1) // 2
        hist[(i, j)] += 1
    return hist


def alternative_histogram(n: int) -> dict[tuple[int, int], int]:
    """Diagnostic bucketing: first variable of the lexicographically smallest chain.

    Used only when :func:`hd_histogram` disagrees with ``4 * M_n``.
    """
    hist: Counter = Counter()
    for f in enumerate_ncf(n):
        chains = _all_chains(n, f.value)
        first = min(chains)[0][0]
        hist[(first, (bf.min_const_hd(f) + 1) // 2)] += 1
    return dict(hist)


def _all_chains(n: int, v: int) -> list[tuple[tuple[int, int, int], ...]]:
    f = TruthTable(n, v)
    if n == 1:
        return [c for c in [_ncf_local(1, v)] if c is not None]
    if bf.is_constant(f):
        return []
    out = []
    for i, a, b in canalizing_triples(f):
        rest = bf.cofactor(f, i, 1 - a)
        for sub in _all_chains(n - 1, rest.value):
            out.append(((i, a, b),) + tuple((j + (j >= i), aa, bb) for j, aa, bb in sub))
    return out


def histogram_matches(n: int) -> tuple[bool, dict[tuple[int, int], tuple[int, int]]]:
    """Compare buckets with ``4 * M_n``; returns ``(ok, {cell: (bucket, expected)})``."""
    m = hd_matrix(n)
    hist = hd_histogram(n)
    cells = {
        (i, j): (hist.get((i, j), 0), 4 * m[i, j])
        for i in range(1, n + 1)
        for j in range(1, m.columns + 1)
    }
    extra = {k for k in hist if k not in cells and hist[k]}
    ok = not extra and all(a == b for a, b in cells.values())
    return ok, cells
