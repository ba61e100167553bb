"""Gray-code Karnaugh maps and structural canalization detection.

Rows carry the first ``ceil(n/2)`` variables and columns the rest, each axis
labelled with the reflected Gray code.  Splitting a block along an axis
gives the first half ``K`` and the second half read backwards ``K*``.
Because the code is reflected, ``K`` and ``K*`` have the same residual
labels line for line.  They are the two cofactors of the variable that
the split removes.

The detector only uses those splits plus constancy checks on blocks.  A
variable at split level ``i`` canalizes with input ``a`` and output ``b``
exactly when every ``a``-side block at that level is constant ``b``.  At
level 1 that is a test on ``K1`` / ``K1*`` alone.  Deeper levels chain
the ``~`` relation over every sibling pair ``(K, K*)`` of the previous
level.  There are no mixed row-then-column recursions: row splits cover
the row variables and column splits cover the column variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import bf
from .bf import TruthTable
from .canalizing import CanalizingTriple, canalizing_triples

ROW, COL = "row", "col"


@lru_cache(maxsize=None)
def gray_codes(bits: int) -> tuple[int, ...]:
    return tuple(k ^ (k >> 1) for k in range(1 << bits))


def gray_labels(bits: int) -> tuple[str, ...]:
    if bits == 0:
        return ("",)
    return tuple(format(g, f"0{bits}b") for g in gray_codes(bits))


def dimensions(n: int) -> tuple[int, int]:
    """``(row_bits, col_bits)``: rows get ``ceil(n/2)`` variables."""
    return (n + 1) // 2, n // 2


@dataclass(frozen=True)
class SubMap:
    """A rectangular block of a K-map.

    ``rows`` / ``cols`` are indices into the parent map so every cell can be
    traced back; ``row_depth`` / ``col_depth`` count how many leading label
    bits have been consumed by splits.
    """

    grid: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    row_depth: int = 0
    col_depth: int = 0
    path: tuple[str, ...] = field(default=())

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.grid), len(self.grid[0])

    @property
    def residual_row_labels(self) -> tuple[str, ...]:
        return tuple(l[self.row_depth:] for l in self.row_labels)

    @property
    def residual_col_labels(self) -> tuple[str, ...]:
        return tuple(l[self.col_depth:] for l in self.col_labels)

    def cells(self) -> set[tuple[int, int]]:
        return {(r, c) for r in self.rows for c in self.cols}

    def constant_value(self) -> int | None:
        """0 or 1 if every cell holds that value, else None."""
        first = self.grid[0][0]
        for line in self.grid:
            for v in line:
                if v != first:
                    return None
        return first


@dataclass(frozen=True)
class KMap(SubMap):
    @property
    def arity(self) -> int:
        return len(self.row_labels[0]) + len(self.col_labels[0])

    @property
    def x(self) -> int:
        return len(self.grid)

    @property
    def y(self) -> int:
        return len(self.grid[0])


@lru_cache(maxsize=None)
def _layout(n: int) -> tuple[tuple[int, ...], ...]:
    rb, cb = dimensions(n)
    return tuple(
        tuple(r << cb | c for c in gray_codes(cb)) for r in gray_codes(rb)
    )


def build_kmap(f: TruthTable) -> KMap:
    n = f.arity
    if n < 2:
        raise ValueError("K-map needs arity >= 2; use the definitional detector for n < 2")
    rb, cb = dimensions(n)
    v = f.value
    grid = tuple(tuple(v >> k & 1 for k in line) for line in _layout(n))
    return KMap(
        grid=grid,
        row_labels=gray_labels(rb),
        col_labels=gray_labels(cb),
        rows=tuple(range(1 << rb)),
        cols=tuple(range(1 << cb)),
    )


def cell_assignment(kmap: SubMap, r: int, c: int) -> tuple[int, ...]:
    """The assignment (x1..xn) of cell ``(r, c)`` in the full map."""
    label = kmap.row_labels[r] + kmap.col_labels[c]
    return tuple(int(ch) for ch in label)


def decompose(block: SubMap, axis: str) -> tuple[SubMap, SubMap]:
    """Split into the first half ``K`` and the reversed second half ``K*``."""
    if axis == ROW:
        lines = len(block.grid)
        if lines < 2:
            raise ValueError("row axis exhausted")
        h = lines // 2
        k = SubMap(
            block.grid[:h], block.row_labels[:h], block.col_labels,
            block.rows[:h], block.cols, block.row_depth + 1, block.col_depth,
            block.path + ("row:K",),
        )
        ks = SubMap(
            block.grid[h:][::-1], block.row_labels[h:][::-1], block.col_labels,
            block.rows[h:][::-1], block.cols, block.row_depth + 1, block.col_depth,
            block.path + ("row:K*",),
        )
        return k, ks
    if axis == COL:
        lines = len(block.grid[0])
        if lines < 2:
            raise ValueError("column axis exhausted")
        h = lines // 2
        k = SubMap(
            tuple(line[:h] for line in block.grid), block.row_labels, block.col_labels[:h],
            block.rows, block.cols[:h], block.row_depth, block.col_depth + 1,
            block.path + ("col:K",),
        )
        ks = SubMap(
            tuple(line[h:][::-1] for line in block.grid), block.row_labels, block.col_labels[h:][::-1],
            block.rows, block.cols[h:][::-1], block.row_depth, block.col_depth + 1,
            block.path + ("col:K*",),
        )
        return k, ks
    raise ValueError(f"unknown axis {axis!r}")


def _axis_lines(block: SubMap, axis: str) -> int:
    return len(block.grid) if axis == ROW else len(block.grid[0])


def similar_sides(a: SubMap, b: SubMap, axis: str) -> set[tuple[int, int]]:
    """Sides ``s`` and values ``v`` for which the half ``s`` of both blocks is constant ``v``.

    The halves are taken one split deeper along ``axis``, so they sit at
    the same location in both blocks.  A block with a single line along
    ``axis`` cannot be halved; then the whole block stands in for the
    region on both sides.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if _axis_lines(a, axis) < 2:
        va, vb = a.constant_value(), b.constant_value()
        if va is not None and va == vb:
            return {(0, va), (1, va)}
        return set()
    out = set()
    for side, (ha, hb) in enumerate(zip(decompose(a, axis), decompose(b, axis))):
        va = ha.constant_value()
        if va is not None and va == hb.constant_value():
            out.add((side, va))
    return out


def _constant_lines(block: SubMap, axis: str, v: int) -> set[int]:
    if axis == ROW:
        return {r for r, line in enumerate(block.grid) if all(e == v for e in line)}
    width = len(block.grid[0])
    return {c for c in range(width) if all(line[c] == v for line in block.grid)}


def similar(a: SubMap, b: SubMap, axis: str | None = None) -> bool:
    """The ``~`` relation between two aligned blocks.

    True when at least half of the lines along an axis are entirely constant
    with one shared value, at the same positions in both blocks.  With
    ``axis=None`` either axis will do.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.residual_row_labels != b.residual_row_labels or a.residual_col_labels != b.residual_col_labels:
        raise ValueError("blocks are not aligned (residual labels differ)")
    for ax in (ROW, COL) if axis is None else (axis,):
        need = (_axis_lines(a, ax) + 1) // 2
        for v in (0, 1):
            if len(_constant_lines(a, ax, v) & _constant_lines(b, ax, v)) >= need:
                return True
    return False


def level_blocks(kmap: SubMap, axis: str, level: int) -> list[SubMap]:
    """All ``2**level`` blocks after ``level`` splits along ``axis``."""
    blocks = [kmap]
    for _ in range(level):
        blocks = [half for blk in blocks for half in decompose(blk, axis)]
    return blocks


def side_blocks(kmap: SubMap, axis: str, level: int, a: int) -> list[SubMap]:
    """The ``a``-side blocks of split ``level`` across every decomposition path."""
    return [blk for blk in level_blocks(kmap, axis, level) if blk.path[-1].endswith("*") == bool(a)]


def _half_lines_constant(kmap: KMap) -> bool:
    # necessary condition: a canalized half is x/2 full rows or y/2 full columns
    x, y = kmap.x, kmap.y
    rows = [kmap.grid[r] for r in range(x)]
    cols = [tuple(kmap.grid[r][c] for r in range(x)) for c in range(y)]
    for lines, need in ((rows, x // 2), (cols, y // 2)):
        for v in (0, 1):
            if sum(1 for line in lines if all(e == v for e in line)) >= need:
                return True
    return False


def _axis_triples(kmap: KMap, axis: str, first_var: int) -> list[CanalizingTriple]:
    bits = len(kmap.row_labels[0]) if axis == ROW else len(kmap.col_labels[0])
    out = []
    k1, k1s = decompose(kmap, axis)
    # condition (i): K1 or K1* is constant
    for side, blk in enumerate((k1, k1s)):
        v = blk.constant_value()
        if v is not None:
            out.append(CanalizingTriple(first_var, side, v))
    # condition (ii): K_j ~ K_j* for every sibling pair down to level-1,
    # then the a-side halves of the last pairs are constant together
    pairs = [(k1, k1s)]
    chained = True
    for level in range(2, bits + 1):
        chained = chained and all(similar(k, ks, axis) for k, ks in pairs)
        if not chained:
            break
        sides = None
        for k, ks in pairs:
            s = similar_sides(k, ks, axis)
            sides = s if sides is None else sides & s
            if not sides:
                break
        for a, b in sorted(sides):
            out.append(CanalizingTriple(first_var + level - 1, a, b))
        if level < bits:
            pairs = [decompose(blk, axis) for pair in pairs for blk in pair]
    return out


def kmap_triples(f: TruthTable) -> list[CanalizingTriple]:
    """Every canalizing triple the structural procedure finds, ordered by ``(i, a)``.

    Arity below 2 and constant functions go to the definitional test.
    """
    if f.arity < 2 or bf.is_constant(f):
        return canalizing_triples(f)
    kmap = build_kmap(f)
    if not _half_lines_constant(kmap):
        return []
    rb, _ = dimensions(f.arity)
    return _axis_triples(kmap, ROW, 1) + _axis_triples(kmap, COL, rb + 1)


def detect_canalizing_kmap(f: TruthTable) -> CanalizingTriple | None:
    """First witness (smallest variable, then input 0) or None."""
    if f.arity < 2 or bf.is_constant(f):
        triples = canalizing_triples(f)
        return triples[0] if triples else None
    kmap = build_kmap(f)
    if not _half_lines_constant(kmap):
        return None
    rb, _ = dimensions(f.arity)
    for axis, first in ((ROW, 1), (COL, rb + 1)):
        triples = _axis_triples(kmap, axis, first)
        if triples:
            return triples[0]
    return None


def region(f: TruthTable, i: int, a) -> set[tuple[int, int]]:
    """K-map cells whose assignment has ``x_i == a``."""
    n = f.arity
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    rb, cb = dimensions(n)
    rl, cl = gray_labels(rb), gray_labels(cb)
    want = "1" if a else "0"
    out = set()
    for r, rlab in enumerate(rl):
        for c, clab in enumerate(cl):
            if (rlab + clab)[i - 1] == want:
                out.add((r, c))
    return out


def render(kmap: SubMap) -> str:
    """Aligned text grid with Gray labels; rows are row labels."""
    rb = len(kmap.row_labels[0])
    cb = len(kmap.col_labels[0])
    corner = "".join(f"x{k}" for k in range(1, rb + 1))
    corner += "\\" + "".join(f"x{k}" for k in range(rb + 1, rb + cb + 1))
    width = max(len(corner), rb)
    cw = max(1, cb)
    lines = [corner.ljust(width) + " " + " ".join(l.rjust(cw) for l in kmap.col_labels)]
    for lab, line in zip(kmap.row_labels, kmap.grid):
        lines.append(lab.ljust(width) + " " + " ".join(str(v).rjust(cw) for v in line))
    return "\n".join(lines)
