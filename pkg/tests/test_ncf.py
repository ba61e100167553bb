from itertools import product

import pytest

from canalkit import bf, ncf
from canalkit.canalizing import canalizing_set, canalizing_triples

from oracles import brute_ncf_set


def test_chain_and():
    chain = ncf.ncf_chain(bf.from_binary("0001"))
    assert chain.complete
    assert [tuple(t) for t in chain.entries] == [(1, 0, 0), (2, 0, 0)]


def test_chain_xor_none():
    assert ncf.ncf_chain(bf.from_binary("0110")) is None


def test_chain_inessential_variable_none():
    # x2 and x3, independent of x1
    assert ncf.ncf_chain(bf.from_binary("00010001")) is None


def test_chain_constants_and_literals():
    assert ncf.ncf_chain(bf.constant(2, 1)) is None
    assert ncf.ncf_chain(bf.from_binary("01")) is not None
    assert ncf.ncf_chain(bf.from_binary("10")) is not None
    assert ncf.ncf_chain(bf.from_binary("0011")) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_reproduces_function(n):
    for f in ncf.enumerate_ncf(n):
        chain = ncf.ncf_chain(f)
        assert sorted(chain.variables) == list(range(1, n + 1))
        for k, x in enumerate(product((0, 1), repeat=n)):
            assert ncf.evaluate_chain(chain, n, x) == f[k]


@pytest.mark.parametrize("n, count", [(1, 2), (2, 8), (3, 64), (4, 736)])
def test_enumerate_counts_and_oracle(n, count):
    got = ncf.enumerate_ncf(n)
    assert len(got) == count
    assert {str(f) for f in got} == brute_ncf_set(n)


def test_enumerate_n5():
    assert len(ncf.enumerate_ncf(5)) == 10624 == ncf.hd_matrix(5).n_c


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_equals_chain_accepted(n):
    accepted = {f for f in bf.enumerate_all(n) if ncf.ncf_chain(f)}
    assert accepted == ncf.enumerate_ncf(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ncf_properties(n):
    canal = set(canalizing_set(n))
    ncfs = ncf.enumerate_ncf(n)
    odd = set(range(1, 1 << (n - 1), 2))
    for f in ncfs:
        assert bf.weight(f) % 2 == 1
        assert bf.min_const_hd(f) in odd
        assert f in canal
        g = bf.complement(f)
        assert g in ncfs
        cf, cg = ncf.ncf_chain(f), ncf.ncf_chain(g)
        assert [(t.variable, t.input) for t in cf.entries] == [(t.variable, t.input) for t in cg.entries]
        assert [t.output for t in cg.entries] == [1 - t.output for t in cf.entries]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_merge_preserves_ncf(n):
    ncfs = ncf.enumerate_ncf(n + 1)
    for f in ncf.enumerate_ncf(n):
        for i, a, c in product(range(1, n + 2), (0, 1), (0, 1)):
            assert bf.merge(f, i, a, c) in ncfs


def test_three_variable_hd_values():
    assert {bf.min_const_hd(f) for f in ncf.enumerate_ncf(3)} == {1, 3}


# -- matrix ---------------------------------------------------------------------

def test_matrix_m2():
    m = ncf.hd_matrix(2)
    assert m.as_lists() == [[2], [0]]
    assert m.n_c == 8


def test_matrix_m3():
    m = ncf.hd_matrix(3)
    assert m.as_lists() == [[4, 4], [0, 4], [0, 4]]
    assert m.n_c == 64
    assert m[1, 1] == 4 and m[3, 2] == 4


def test_matrix_m4():
    m = ncf.hd_matrix(4)
    assert m.as_lists() == [[8, 24, 24, 8], [0, 16, 24, 8], [0, 8, 24, 8], [0, 0, 24, 8]]
    assert m.n_c == 736
    assert m.hd_labels == [1, 3, 5, 7]


def test_matrix_m5():
    m = ncf.hd_matrix(5)
    assert m.column_sums() == [16, 160, 480, 160, 320, 960, 480, 80]
    assert m.n_c == 10624


@pytest.mark.parametrize("n", range(3, 9))
def test_matrix_structure(n):
    m = ncf.hd_matrix(n)
    cols = 1 << (n - 2)
    half = 1 << (n - 3)
    assert len(m.rows) == n and m.columns == cols
    assert all(v >= 0 for row in m.rows for v in row)
    assert m.n_c == 4 * sum(map(sum, m.rows))
    for j in range(half + 1, cols + 1):
        for i in range(1, n + 1):
            assert m[i, j] == m[1, cols + 1 - j]
    for j in range(1, half + 1):
        assert m[n, j] == 0


def test_matrix_rejects_small():
    with pytest.raises(ValueError):
        ncf.hd_matrix(1)


# -- histogram -------------------------------------------------------------------

def test_histogram_n2():
    h = ncf.hd_histogram(2)
    assert h == {(1, 1): 8, (2, 1): 0}


def test_histogram_n3_cells():
    h = ncf.hd_histogram(3)
    assert h[(1, 1)] == 16
    assert h[(3, 2)] == 16
    # the weight-1 / weight-7 functions are the 3-literal ANDs and ORs
    lows = [f for f in ncf.enumerate_ncf(3) if bf.min_const_hd(f) == 1]
    assert len(lows) == 16
    assert all(ncf.start_variable(f) == 1 for f in lows)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_histogram_matches_matrix(n):
    ok, cells = ncf.histogram_matches(n)
    assert ok, cells


def test_start_variable_is_minimal():
    # brute force over all complete chains for n=3
    for f in ncf.enumerate_ncf(3):
        starts = {c[0][0] for c in ncf._all_chains(3, f.value)}
        assert ncf.start_variable(f) == min(starts)


def test_start_variable_has_canalizing_triple():
    for f in ncf.enumerate_ncf(4):
        i = ncf.start_variable(f)
        assert any(t.variable == i for t in canalizing_triples(f))
