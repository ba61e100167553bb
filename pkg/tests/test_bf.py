from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canalkit import bf
from canalkit.bf import TruthTable


@st.composite
def tables(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return TruthTable(n, draw(st.integers(0, (1 << (1 << n)) - 1)))


# -- codec -------------------------------------------------------------------

@pytest.mark.parametrize("text, n, value", [
    ("1000", 2, 1),   # f1 of the 2-variable table: 1 only at input 00
    ("0110", 2, 6),   # XOR
    ("0000", 2, 0),
    ("00000000", 3, 0),
])
def test_binary_to_int(text, n, value):
    assert bf.parse(text, n, "binary").value == value
    assert bf.format_tt(bf.from_int(value, n), "binary") == text


def test_hex_example():
    f = bf.from_binary("11010000111100001111000011110000", 5)
    assert bf.to_hex(f) == "D0F0F0F0"
    assert bf.from_hex("d0f0f0f0", 5) == f


@pytest.mark.parametrize("text, n, fmt", [
    ("010", 2, "binary"),
    ("01a1", 2, "binary"),
    ("0F", 2, "hex"),
    ("G", 2, "hex"),
    ("16", 2, "int"),
    ("-1", 2, "int"),
    ("x", 2, "int"),
    ("1", 1, "hex"),
])
def test_codec_errors(text, n, fmt):
    with pytest.raises(ValueError):
        bf.parse(text, n, fmt)


@given(tables())
@settings(max_examples=300)
def test_codec_round_trip(f):
    fmts = ["binary", "int"] + (["hex"] if f.arity >= 2 else [])
    for fmt in fmts:
        s = bf.format_tt(f, fmt)
        assert bf.parse(s, f.arity, fmt) == f
        assert bf.format_tt(bf.parse(s, f.arity, fmt), fmt) == s


def test_arity_is_part_of_identity():
    assert TruthTable(2, 0) != TruthTable(3, 0)


def test_value_range_checked():
    with pytest.raises(ValueError):
        TruthTable(1, 4)


# -- evaluate / projection -----------------------------------------------------

def test_evaluate_table_rows():
    f = bf.from_binary("01010101")
    assert bf.evaluate(f, (1, 0, 1)) is True
    assert bf.evaluate(f, (1, 1, 0)) is False
    ones = bf.constant(3, 1)
    assert all(bf.evaluate(ones, x) for x in product((0, 1), repeat=3))
    with pytest.raises(ValueError):
        bf.evaluate(f, (1, 0))


def test_projection():
    assert str(bf.projection(1, 3)) == "00001111"
    assert str(bf.projection(2, 3)) == "00110011"
    assert str(bf.projection(3, 3)) == "01010101"
    with pytest.raises(ValueError):
        bf.projection(4, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projection_evaluates_to_variable(n):
    for i in range(1, n + 1):
        p = bf.projection(i, n)
        for x in product((0, 1), repeat=n):
            assert bf.evaluate(p, x) == bool(x[i - 1])


def test_enumerate_all():
    fs = list(bf.enumerate_all(2))
    assert [f.value for f in fs] == list(range(16))
    assert [f.value for f in bf.enumerate_all(3, 10, 13)] == [10, 11, 12]


# -- cofactor / complement / concat / merge ------------------------------------

def test_cofactor_examples():
    f = bf.from_binary("01010101")
    assert str(bf.cofactor(f, 3, 1)) == "1111"
    assert str(bf.cofactor(f, 1, 0)) == "0101"
    assert str(bf.cofactor(bf.from_binary("0001"), 2, 0)) == "00"
    with pytest.raises(ValueError):
        bf.cofactor(f, 4, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_shannon_expansion_exhaustive(n):
    for f in bf.enumerate_all(n):
        for i in range(1, n + 1):
            cof = {a: bf.cofactor(f, i, a) for a in (0, 1)}
            for x in product((0, 1), repeat=n):
                rest = x[: i - 1] + x[i:]
                assert bf.evaluate(f, x) == bf.evaluate(cof[x[i - 1]], rest)


def test_complement_concat_examples():
    assert str(bf.complement(bf.from_binary("0110"))) == "1001"
    assert str(bf.concat(bf.from_binary("0001"), bf.from_binary("1111"))) == "00011111"
    z = bf.from_binary("0000")
    assert bf.concat(z, bf.complement(z)) == bf.projection(1, 3)
    with pytest.raises(ValueError):
        bf.concat(z, bf.from_binary("01"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_concat_then_cofactor(n):
    fs = list(bf.enumerate_all(n))
    for f in fs:
        for g in fs:
            h = bf.concat(f, g)
            assert bf.cofactor(h, 1, 0) == f
            assert bf.cofactor(h, 1, 1) == g


@pytest.mark.parametrize("f, i, a, c, want", [
    ("01", 1, 0, 0, "0001"),
    ("01", 1, 1, 1, "0111"),
    ("01", 2, 1, 0, "0010"),
    ("01", 1, 0, 1, "1101"),
    ("01", 1, 1, 0, "0100"),
])
def test_merge_examples(f, i, a, c, want):
    assert str(bf.merge(bf.from_binary(f), i, a, c)) == want


def test_merge_position_checked():
    with pytest.raises(ValueError):
        bf.merge(bf.from_binary("01"), 3, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_merge_then_cofactor(n):
    for f in bf.enumerate_all(n):
        for i in range(1, n + 2):
            for a in (0, 1):
                for c in (0, 1):
                    h = bf.merge(f, i, a, c)
                    assert bf.cofactor(h, i, a) == bf.constant(n, c)
                    assert bf.cofactor(h, i, 1 - a) == f


# -- metrics -------------------------------------------------------------------

def test_metrics_examples():
    assert bf.min_const_hd(bf.from_binary("0001")) == 1
    assert bf.hamming(bf.from_binary("0110"), bf.from_binary("1001")) == 4
    assert bf.weight(bf.from_binary("0111")) == 3
    with pytest.raises(ValueError):
        bf.hamming(bf.from_binary("01"), bf.from_binary("0110"))


@given(tables())
def test_complement_properties(f):
    g = bf.complement(f)
    assert bf.complement(g) == f
    assert bf.hamming(f, g) == f.size
    assert bf.min_const_hd(f) == bf.min_const_hd(g)
