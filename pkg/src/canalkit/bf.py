"""Truth-table representation and the basic algebra on Boolean functions.

A function of arity ``n`` is stored as a Python int whose bit ``k`` is
``f(k)``.  Index ``k`` is read with ``x1`` as the most significant bit, so
for ``n = 3`` the table is ordered 000, 001, ..., 111 and ``x1`` is the
slowest-changing column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

MAX_ARITY = 32

_FORMATS = ("binary", "hex", "int")


@dataclass(frozen=True, slots=True)
class TruthTable:
    arity: int
    value: int

    def __post_init__(self):
        if not 0 <= self.arity <= MAX_ARITY:
            raise ValueError(f"arity must be in 0..{MAX_ARITY}, got {self.arity}")
        if not 0 <= self.value < (1 << (1 << self.arity)):
            raise ValueError(
                f"value {self.value} does not fit a {self.arity}-variable truth table"
            )

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def bits(self) -> tuple[bool, ...]:
        v = self.value
        return tuple(bool(v >> k & 1) for k in range(self.size))

    def __getitem__(self, k: int) -> bool:
        if not 0 <= k < self.size:
            raise IndexError(k)
        return bool(self.value >> k & 1)

    def __str__(self) -> str:
        return to_binary(self)

    @classmethod
    def from_bits(cls, bits: Sequence) -> "TruthTable":
        size = len(bits)
        arity = size.bit_length() - 1
        if size == 0 or 1 << arity != size:
            raise ValueError(f"truth table length {size} is not a power of two")
        value = 0
        for k, b in enumerate(bits):
            if b:
                value |= 1 << k
        return cls(arity, value)


# ---------------------------------------------------------------------------
# Encodings
# ---------------------------------------------------------------------------

def from_binary(text: str, arity: int | None = None) -> TruthTable:
    """Parse a 0/1 string; the leftmost character is bit 0."""
    text = text.strip()
    if arity is None:
        arity = len(text).bit_length() - 1
        if not text or 1 << arity != len(text):
            raise ValueError(f"binary length {len(text)} is not a power of two")
    if len(text) != 1 << arity:
        raise ValueError(
            f"binary form of a {arity}-variable function needs {1 << arity} digits, got {len(text)}"
        )
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(f"invalid binary character(s): {''.join(sorted(bad))!r}")
    # bit k is the k-th character, so reverse before int()
    return TruthTable(arity, int(text[::-1], 2))


def from_hex(text: str, arity: int) -> TruthTable:
    """Parse hex where each digit covers 4 consecutive bits, leftmost bit high."""
    text = text.strip()
    if text[:2].lower() == "0x":
        text = text[2:]
    if arity < 2:
        raise ValueError("hex encoding needs arity >= 2")
    want = (1 << arity) // 4
    if len(text) != want:
        raise ValueError(f"hex form of a {arity}-variable function needs {want} digits, got {len(text)}")
    try:
        nibbles = [int(ch, 16) for ch in text]
    except ValueError:
        raise ValueError(f"invalid hex string {text!r}") from None
    return from_binary("".join(f"{d:04b}" for d in nibbles), arity)


def from_int(value: int, arity: int) -> TruthTable:
    if value < 0 or value >= 1 << (1 << arity):
        raise ValueError(f"integer {value} out of range for arity {arity} (must be < 2^{1 << arity})")
    return TruthTable(arity, value)


def to_binary(f: TruthTable) -> str:
    if f.arity == 0:
        return str(f.value)
    return format(f.value, f"0{f.size}b")[::-1]


def to_hex(f: TruthTable) -> str:
    if f.arity < 2:
        raise ValueError("hex encoding needs arity >= 2")
    s = to_binary(f)
    return "".join(f"{int(s[k:k + 4], 2):X}" for k in range(0, len(s), 4))


def to_int(f: TruthTable) -> int:
    return f.value


def parse(text: str, arity: int, fmt: str = "binary") -> TruthTable:
    """Decode ``text`` in one of the formats ``binary``, ``hex``, ``int``."""
    if fmt == "binary":
        return from_binary(text, arity)
    if fmt == "hex":
        return from_hex(text, arity)
    if fmt == "int":
        try:
            value = int(text.strip(), 0)
        except ValueError:
            raise ValueError(f"invalid integer {text!r}") from None
        return from_int(value, arity)
    raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def format_tt(f: TruthTable, fmt: str = "binary") -> str:
    if fmt == "binary":
        return to_binary(f)
    if fmt == "hex":
        return to_hex(f)
    if fmt == "int":
        return str(f.value)
    raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def constant(n: int, c) -> TruthTable:
    return TruthTable(n, full_mask(n) if c else 0)


@lru_cache(maxsize=None)
def _projection_mask(i: int, n: int) -> int:
    block = 1 << (n - i)
    ones = ((1 << block) - 1) << block
    period = 2 * block
    mask = 0
    for start in range(0, 1 << n, period):
        mask |= ones << start
    return mask


def projection(i: int, n: int) -> TruthTable:
    """The function ``x_i`` over ``n`` variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    return TruthTable(n, _projection_mask(i, n))


def var_mask(n: int, i: int, a) -> int:
    """Bitmask of the table positions where ``x_i == a``."""
    m = _projection_mask(i, n)
    return m if a else full_mask(n) ^ m


def enumerate_all(n: int, start: int = 0, stop: int | None = None) -> Iterator[TruthTable]:
    """Yield the ``n``-variable functions with integer codes in ``[start, stop)``.

    The default range is every function, in integer order.  Splitting the
    range gives disjoint chunks for parallel sweeps.
    """
    total = 1 << (1 << n)
    stop = total if stop is None else min(stop, total)
    for v in range(start, stop):
        yield TruthTable(n, v)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def _check_var(f: TruthTable, i: int):
    if not 1 <= i <= f.arity:
        raise ValueError(f"variable index {i} out of range 1..{f.arity}")


def index_of(assignment: Sequence) -> int:
    k = 0
    for x in assignment:
        k = k << 1 | (1 if x else 0)
    return k


def evaluate(f: TruthTable, assignment: Sequence) -> bool:
    if len(assignment) != f.arity:
        raise ValueError(f"assignment has {len(assignment)} values, function has arity {f.arity}")
    return bool(f.value >> index_of(assignment) & 1)


def cofactor(f: TruthTable, i: int, a) -> TruthTable:
    """Restrict ``x_i = a``; the remaining variables keep their order."""
    _check_var(f, i)
    n = f.arity
    block = 1 << (n - i)
    low = (1 << block) - 1
    shift = block if a else 0
    v = f.value
    out = 0
    for j in range(1 << (i - 1)):
        out |= ((v >> (2 * block * j + shift)) & low) << (block * j)
    return TruthTable(n - 1, out)


def is_constant(f: TruthTable) -> bool:
    return f.value == 0 or f.value == full_mask(f.arity)


def complement(f: TruthTable) -> TruthTable:
    return TruthTable(f.arity, f.value ^ full_mask(f.arity))


def concat(f: TruthTable, g: TruthTable) -> TruthTable:
    """Juxtapose the tables: the new leading variable selects ``f`` (0) or ``g`` (1)."""
    if f.arity != g.arity:
        raise ValueError(f"cannot concatenate arities {f.arity} and {g.arity}")
    return TruthTable(f.arity + 1, f.value | g.value << f.size)


def merge(f: TruthTable, i: int, a, c) -> TruthTable:
    """Insert a new variable at position ``i`` that forces ``c`` when it equals ``a``.

    The result ``h`` has arity ``n + 1``; ``h|x_i=a`` is constant ``c`` and
    ``h|x_i=not a`` is ``f``.  Existing variables at positions ``>= i`` move
    up by one.
    """
    n = f.arity
    if not 1 <= i <= n + 1:
        raise ValueError(f"merge position {i} out of range 1..{n + 1}")
    block = 1 << (n + 1 - i)
    low = (1 << block) - 1
    fill = low if c else 0
    v = f.value
    out = 0
    for j in range(1 << (i - 1)):
        chunk = (v >> (block * j)) & low
        lo, hi = (fill, chunk) if not a else (chunk, fill)
        out |= (lo | hi << block) << (2 * block * j)
    return TruthTable(n + 1, out)


def weight(f: TruthTable) -> int:
    return f.value.bit_count()


def hamming(f: TruthTable, g: TruthTable) -> int:
    if f.arity != g.arity:
        raise ValueError(f"arity mismatch: {f.arity} vs {g.arity}")
    return (f.value ^ g.value).bit_count()


def min_const_hd(f: TruthTable) -> int:
    """Hamming distance to the nearer of the two constant functions."""
    w = weight(f)
    return min(w, f.size - w)
