"""The reproduction suite behind ``canalkit verify``.

Each check compares an expected value with the computed one.  Checks are
grouped by criterion number so a subset can be run with ``--only``.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from typing import Callable, Iterator

from . import bf, canalizing, kmap, ncf, pncf
from .bf import TruthTable

CANALIZING_N2 = [
    "1100", "1101", "1110", "1111", "0000", "0001", "0010",
    "0011", "0111", "1011", "0100", "0101", "1000", "1010",
]
SAMPLE_CANALIZING_N5 = "11010000111100001111000011110000"
SAMPLE_NONCANALIZING_N5 = "00001110000111111110000111110000"

M2 = [[2], [0]]
M3 = [[4, 4], [0, 4], [0, 4]]
M4 = [[8, 24, 24, 8], [0, 16, 24, 8], [0, 8, 24, 8], [0, 0, 24, 8]]

SAMPLES = 100_000


@dataclass
class Check:
    criterion: int
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion:>2} {self.name}: expected={self.expected} actual={self.actual}"

    def record(self) -> str:
        d = asdict(self)
        d["passed"] = self.passed
        return json.dumps(d, sort_keys=True, default=str)


def _criterion_1(seed, jobs):
    got = canalizing.canalizing_set(2, jobs)
    yield Check(1, "canalizing census n=2", 14, len(got))
    yield Check(1, "n=2 set equals reference list", sorted(CANALIZING_N2), sorted(str(f) for f in got))
    names = {str(f) for f in got}
    yield Check(1, "XOR and XNOR excluded", [False, False], ["0110" in names, "1001" in names])


def _random_planted(rng: random.Random, n: int) -> TruthTable:
    g = TruthTable(n - 1, rng.getrandbits(1 << (n - 1)))
    return bf.merge(g, rng.randint(1, n), rng.randint(0, 1), rng.randint(0, 1))


def _criterion_2(seed, jobs):
    for n in (2, 3, 4):
        bad = sum(
            (kmap.detect_canalizing_kmap(f) is None) == canalizing.is_canalizing(f)
            for f in bf.enumerate_all(n)
        )
        yield Check(2, f"K-map vs definitional, exhaustive n={n}", 0, bad)
    rng = random.Random(seed)
    for n in (5, 6):
        bad = 0
        for _ in range(SAMPLES):
            f = TruthTable(n, rng.getrandbits(1 << n))
            bad += (kmap.detect_canalizing_kmap(f) is None) == canalizing.is_canalizing(f)
        yield Check(2, f"K-map vs definitional, {SAMPLES} random n={n}", 0, bad)
        # uniform samples are almost never canalizing; planted ones are
        bad = 0
        for _ in range(SAMPLES // 10):
            f = _random_planted(rng, n)
            bad += kmap.kmap_triples(f) != canalizing.canalizing_triples(f)
        yield Check(2, f"K-map triples vs definitional, {SAMPLES // 10} planted n={n}", 0, bad)
    w = kmap.detect_canalizing_kmap(bf.from_binary(SAMPLE_CANALIZING_N5))
    yield Check(2, "sample n=5 canalizing witness", (3, 1, 0), tuple(w) if w else None)
    yield Check(2, "sample n=5 non-canalizing", None, kmap.detect_canalizing_kmap(bf.from_binary(SAMPLE_NONCANALIZING_N5)))


def _concat_rule_counterexamples(n: int, pairs) -> dict[str, int]:
    is_c = canalizing.is_canalizing
    bad = {"complement": 0, "self_concat": 0, "concat_complement": 0, "noncanalizing_left": 0, "constant_left": 0, "both_noncanalizing": 0}
    for f, g in pairs:
        fc = is_c(f)
        if fc != is_c(bf.complement(f)):
            bad["complement"] += 1
        if fc and not is_c(bf.concat(f, f)):
            bad["self_concat"] += 1
        if is_c(bf.concat(f, bf.complement(f))) != bf.is_constant(f):
            bad["concat_complement"] += 1
        fg = is_c(bf.concat(f, g))
        if not fc and fg != bf.is_constant(g):
            bad["noncanalizing_left"] += 1
        if bf.is_constant(f) and not fg:
            bad["constant_left"] += 1
        if not fc and not is_c(g) and fg:
            bad["both_noncanalizing"] += 1
    return bad


def _criterion_3(seed, jobs):
    for n in (1, 2, 3):
        fs = list(bf.enumerate_all(n))
        bad = _concat_rule_counterexamples(n, ((f, g) for f in fs for g in fs))
        yield Check(3, f"concatenation rules exhaustive n={n}", {k: 0 for k in bad}, bad)
    # n=4: premises drawn from the relevant classes so each rule is exercised
    rng = random.Random(seed + 1)
    c4 = [f.value for f in canalizing.canalizing_set(4, jobs)]
    c4set = set(c4)
    nc4 = [v for v in range(1 << 16) if v not in c4set]
    pools = [c4, nc4, [0, 0xFFFF], list(range(1 << 16))]
    pairs = []
    for k in range(SAMPLES):
        fpool = pools[k % 4]
        gpool = pools[(k // 4) % 4]
        pairs.append((TruthTable(4, rng.choice(fpool)), TruthTable(4, rng.choice(gpool))))
    bad = _concat_rule_counterexamples(4, pairs)
    yield Check(3, f"concatenation rules on {SAMPLES} samples n=4", {k: 0 for k in bad}, bad)


def _criterion_4(seed, jobs):
    yield Check(4, "formula(2)", 12, canalizing.distance1_extension_formula(2))
    yield Check(4, "formula(3)", 76, canalizing.distance1_extension_formula(3))
    for n in (2, 3):
        want = canalizing.distance1_extension_formula(n)
        full = bf.full_mask(n)
        oracles = sorted(
            {canalizing.distance1_extension_count(TruthTable(n, v)) for k in range(1 << n) for v in (1 << k, full ^ (1 << k))}
        )
        yield Check(4, f"oracle over all distance-1 f, n={n}", [want], oracles)


def _criterion_5(seed, jobs):
    c2 = canalizing.canalizing_set(2)
    c3, s3 = canalizing.generate_next(c2, jobs)
    yield Check(5, "generate_next(C2) equals exhaustive C3", True, c3 == set(canalizing.canalizing_set(3)))
    yield Check(5, "|C3|", 120, len(c3))
    yield Check(5, "C2->C3 checks <= 132", True, s3.checks_performed <= 132)
    c4, s4 = canalizing.generate_next(c3, jobs)
    yield Check(5, "generate_next(C3) equals exhaustive C4", True, c4 == set(canalizing.canalizing_set(4)))
    yield Check(5, "|C4|", 3514, len(c4))
    yield Check(5, "C3->C4 checks <= 118^2-118", True, s4.checks_performed <= 118 * 118 - 118)
    a, sa = canalizing.generate_next(c4, 1)
    b, sb = canalizing.generate_next(c4, max(jobs, 4))
    yield Check(5, "C4->C5 identical across job counts", True, a == b and sa == sb)
    yield Check(5, "|C5| stable", sa.result_count, sb.result_count)


def _criterion_6(seed, jobs):
    yield Check(6, "|NCF(3)|", 64, len(ncf.enumerate_ncf(3)))
    yield Check(6, "|NCF(4)|", 736, len(ncf.enumerate_ncf(4)))
    for n in (1, 2, 3, 4):
        accepted = {f for f in bf.enumerate_all(n) if ncf.ncf_chain(f) is not None}
        yield Check(6, f"enumerate_ncf({n}) equals chain-accepted set", True, accepted == ncf.enumerate_ncf(n))


def _criterion_7(seed, jobs):
    yield Check(7, "M2", M2, ncf.hd_matrix(2).as_lists())
    yield Check(7, "M3", M3, ncf.hd_matrix(3).as_lists())
    yield Check(7, "M4", M4, ncf.hd_matrix(4).as_lists())
    yield Check(7, "N_c(3)", 64, ncf.hd_matrix(3).n_c)
    yield Check(7, "N_c(4)", 736, ncf.hd_matrix(4).n_c)
    yield Check(7, "N_c(5)", 10624, ncf.hd_matrix(5).n_c)
    yield Check(7, "|NCF(5)| equals N_c(5)", ncf.hd_matrix(5).n_c, len(ncf.enumerate_ncf(5)))


def _criterion_8(seed, jobs):
    for n in (2, 3, 4):
        ok, cells = ncf.histogram_matches(n)
        got = {f"{i},{j}": b for (i, j), (b, _) in sorted(cells.items())}
        want = {f"{i},{j}": e for (i, j), (_, e) in sorted(cells.items())}
        yield Check(8, f"H.D histogram equals 4*M{n}", want, got)
        if not ok:
            alt = ncf.alternative_histogram(n)
            yield Check(8, f"diagnostic: alternative tie-break n={n}", want,
                        {f"{i},{j}": alt.get((i, j), 0) for (i, j) in sorted(cells)})


def _criterion_9(seed, jobs):
    census = pncf.depth_census(4, jobs)
    totals = {d: sum(v.values()) for d, v in census.items()}
    yield Check(9, "depth totals n=4", {1: 2186, 2: 336, 3: 256, 4: 736}, totals)
    yield Check(9, "depth 1 split", {"constant": 10, "non_canalizing": 2176}, census.get(1))
    yield Check(9, "depth 2 constant remainder", 48, census.get(2, {}).get("constant"))
    yield Check(9, "depth 3 all constant remainder", {"constant": 256}, census.get(3))
    yield Check(9, "sum equals census_canalizing(4)", canalizing.census_canalizing(4), sum(totals.values()))
    buckets = {k: set(v) for k, v in pncf.depth_classification(4, jobs).items()}
    fams = {k: v for k, v in pncf.depth_families(4).items() if v}
    yield Check(9, "families equal classifier buckets", sorted(buckets), sorted(fams))
    yield Check(9, "family sets identical", True, all(buckets[k] == fams.get(k) for k in buckets))


def sweep_outputs(jobs: int) -> str:
    """Machine output of every sweep for one job count."""
    lines = []
    for n in (2, 3, 4):
        lines.append(json.dumps({"arity": n, "class": "canalizing",
                                 "members": [f.value for f in canalizing.canalizing_set(n, jobs)]}))
    census = pncf.depth_census(4, jobs)
    lines.append(json.dumps({str(d): v for d, v in census.items()}, sort_keys=True))
    c, stats = canalizing.generate_next(canalizing.canalizing_set(3, jobs), jobs)
    lines.append(json.dumps({"stats": asdict(stats), "members": sorted(f.value for f in c)}))
    return "\n".join(lines)


def _criterion_10(seed, jobs):
    one = sweep_outputs(1)
    yield Check(10, "sweeps identical for jobs 1 vs 4", True, one == sweep_outputs(4))
    yield Check(10, "sweeps identical on repeat", True, one == sweep_outputs(1))


CRITERIA: dict[int, Callable[[int, int], Iterator[Check]]] = {
    1: _criterion_1,
    2: _criterion_2,
    3: _criterion_3,
    4: _criterion_4,
    5: _criterion_5,
    6: _criterion_6,
    7: _criterion_7,
    8: _criterion_8,
    9: _criterion_9,
    10: _criterion_10,
}


def run_checks(only=None, seed: int = 0, jobs: int = 1) -> Iterator[Check]:
    for num, fn in CRITERIA.items():
        if only and num not in only:
            continue
        yield from fn(seed, jobs)
