"""Canalizing depth and the partially nested canalizing census."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import product

import numpy as np

from . import bf
from ._sweep import partition, run_chunks
from .bf import TruthTable
from .canalizing import CanalizingTriple, canalizing_triples, is_canalizing, is_canalizing_many
from .ncf import NestedChain

CONSTANT = "constant"
NON_CANALIZING = "non_canalizing"
NESTED = "nested"
REMAINDER_CLASSES = (CONSTANT, NON_CANALIZING, NESTED)


@dataclass(frozen=True)
class DepthReport:
    depth: int
    chain: NestedChain
    remainder_class: str
    remainder: TruthTable | None


@lru_cache(maxsize=None)
def _deepest(n: int, v: int) -> tuple[int, tuple[tuple[int, int, int], ...], str, int]:
    """Longest chain from ``(n, v)`` as ``(length, local chain, class, remainder)``.

    Chains only extend through non-constant canalizing remainders.  Among
    chains of maximal length the first in ``(variable, input)`` order wins.
    """
    f = TruthTable(n, v)
    if n == 0 or bf.is_constant(f):
        return 0, (), CONSTANT, v
    triples = canalizing_triples(f)
    if not triples:
        return 0, (), NON_CANALIZING, v
    best = None
    for i, a, b in triples:
        rest = bf.cofactor(f, i, 1 - a)
        length, sub, cls, rem = _deepest(n - 1, rest.value)
        if best is None or length + 1 > best[0]:
            chain = ((i, a, b),) + tuple((j + (j >= i), aa, bb) for j, aa, bb in sub)
            best = (length + 1, chain, cls, rem)
    return best


def canalizing_depth(f: TruthTable) -> DepthReport | None:
    """Maximal canalizing chain of ``f``; None when ``f`` is not canalizing.

    Constants count as depth 1 with a constant remainder.  A chain of full
    length ``n`` means ``f`` is nested canalizing.
    """
    n = f.arity
    if n == 0:
        return None
    if bf.is_constant(f):
        c = f.value & 1
        chain = NestedChain((CanalizingTriple(1, 0, c),))
        return DepthReport(1, chain, CONSTANT, bf.cofactor(f, 1, 1))
    length, local, cls, rem = _deepest(n, f.value)
    if length == 0:
        return None
    entries = tuple(CanalizingTriple(*t) for t in local)
    if length == n:
        return DepthReport(n, NestedChain(entries, complete=True), NESTED, None)
    return DepthReport(length, NestedChain(entries), cls, TruthTable(n - length, rem))


def all_chain_lengths(f: TruthTable) -> set[int]:
    """Lengths of every maximal chain (slow, uncached); for cross-checks."""

    def walk(g: TruthTable, depth: int) -> set[int]:
        if g.arity == 0 or bf.is_constant(g):
            return {depth}
        triples = canalizing_triples(g)
        if not triples:
            return {depth}
        out = set()
        for i, a, _ in triples:
            out |= walk(bf.cofactor(g, i, 1 - a), depth + 1)
        return out

    return walk(f, 0)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

def _depth_chunk(bounds: tuple[int, int], n: int) -> list[tuple[int, int, str]]:
    lo, hi = bounds
    vals = np.arange(lo, hi, dtype=np.uint64)
    out = []
    for v in vals[is_canalizing_many(vals, n)].tolist():
        rep = canalizing_depth(TruthTable(n, v))
        out.append((v, rep.depth, rep.remainder_class))
    return out


def depth_classification(n: int = 4, jobs: int = 1) -> dict[tuple[int, str], list[TruthTable]]:
    """Every canalizing function of arity ``n`` keyed by ``(depth, remainder class)``."""
    if not 1 <= n <= 4:
        raise ValueError("depth census is exhaustive and limited to n <= 4")
    chunks = partition(0, 1 << (1 << n), max(jobs, 1) * 4)
    parts = run_chunks(partial(_depth_chunk, n=n), chunks, jobs)
    buckets: dict[tuple[int, str], list[TruthTable]] = {}
    for part in parts:
        for v, d, cls in part:
            buckets.setdefault((d, cls), []).append(TruthTable(n, v))
    return buckets


def depth_census(n: int = 4, jobs: int = 1) -> dict[int, dict[str, int]]:
    """``{depth: {remainder_class: count}}`` over all canalizing functions."""
    out: dict[int, dict[str, int]] = {}
    for (d, cls), members in sorted(depth_classification(n, jobs).items()):
        out.setdefault(d, {})[cls] = len(members)
    return out


# ---------------------------------------------------------------------------
# Constructive families
# ---------------------------------------------------------------------------

def _chain_extensions(g: TruthTable, steps: int) -> set[int]:
    """Every function made by ``steps`` successive merges around ``g``.

    The first merge must not reproduce a constant, so each chain step is a
    genuine canalizing step on a non-constant function.
    """
    layer = {g.value}
    arity = g.arity
    for step in range(steps):
        nxt = set()
        for v in layer:
            h = TruthTable(arity, v)
            for i, a, c in product(range(1, arity + 2), (0, 1), (0, 1)):
                out = bf.merge(h, i, a, c)
                if step == 0 and bf.is_constant(out):
                    continue
                nxt.add(out.value)
        layer = nxt
        arity += 1
    return layer


def depth_families(n: int = 4) -> dict[tuple[int, str], set[TruthTable]]:
    """Build each ``(depth, remainder class)`` family from chains and remainders.

    A family of depth ``d`` holds chains of length ``d`` wrapped around a
    constant or non-canalizing remainder of arity ``n - d``, minus anything
    that also has a longer chain.  Depth ``n`` is the nested class.
    """
    if not 1 <= n <= 4:
        raise ValueError("depth_families is limited to n <= 4")
    reachable: dict[tuple[int, str], set[int]] = {}
    for d in range(1, n + 1):
        m = n - d
        consts = [bf.constant(m, 0), bf.constant(m, 1)]
        cls_const = NESTED if d == n else CONSTANT
        s = set()
        for g in consts:
            s |= _chain_extensions(g, d)
        reachable[(d, cls_const)] = s
        if m >= 1:
            s = set()
            for g in bf.enumerate_all(m):
                if not bf.is_constant(g) and not is_canalizing(g):
                    s |= _chain_extensions(g, d)
            reachable[(d, NON_CANALIZING)] = s
    reachable[(1, CONSTANT)] |= {0, bf.full_mask(n)}

    families: dict[tuple[int, str], set[TruthTable]] = {}
    for (d, cls), s in reachable.items():
        deeper = set()
        for (d2, _), s2 in reachable.items():
            if d2 > d:
                deeper |= s2
        families[(d, cls)] = {TruthTable(n, v) for v in s - deeper}
    return families


def depth1_noncanalizing_family(n: int = 4) -> list[TruthTable]:
    """The depth-1 family as a multiset: every (position, input, output, g)."""
    out = []
    for g in bf.enumerate_all(n - 1):
        if bf.is_constant(g) or is_canalizing(g):
            continue
        for i, a, c in product(range(1, n + 1), (0, 1), (0, 1)):
            out.append(bf.merge(g, i, a, c))
    return out


def census_summary(census: dict[int, dict[str, int]]) -> Counter:
    return Counter({d: sum(v.values()) for d, v in census.items()})
