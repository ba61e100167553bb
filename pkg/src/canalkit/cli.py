"""Command-line entry point: ``canalkit <verb> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import bf, canalizing, checks, kmap, ncf, pncf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _write(text: str, out: str | None):
    if text and not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_function(args) -> bf.TruthTable:
    if args.tt is None:
        raise UsageError("--tt is required")
    n = args.n
    if n is None:
        if args.format != "binary":
            raise UsageError("--n is required for hex and int input")
        size = len(args.tt.strip())
        if size < 2 or size & (size - 1):
            raise UsageError(f"binary truth table length must be a power of two >= 2, got {size}")
        n = size.bit_length() - 1
    try:
        return bf.parse(args.tt, n, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def classify_report(f: bf.TruthTable) -> dict:
    triples = canalizing.canalizing_triples(f)
    definitional = bool(triples)
    witness = kmap.detect_canalizing_kmap(f)
    by_kmap = witness is not None
    chain = ncf.ncf_chain(f)
    depth = pncf.canalizing_depth(f)
    report = {
        "arity": f.arity,
        "tt": bf.to_binary(f),
        "canalizing": {"definitional": definitional, "kmap": by_kmap, "agree": definitional == by_kmap},
        "kmap_witness": list(witness) if witness else None,
        "triples": [list(t) for t in triples],
        "ncf": [list(t) for t in chain.entries] if chain else None,
        "depth": None,
    }
    if depth:
        report["depth"] = {
            "depth": depth.depth,
            "remainder_class": depth.remainder_class,
            "chain": [list(t) for t in depth.chain.entries],
            "remainder": bf.to_binary(depth.remainder) if depth.remainder is not None else None,
        }
    return report


def _classify_text(r: dict, f: bf.TruthTable, show_kmap: bool) -> str:
    c = r["canalizing"]
    lines = [f"function   {r['tt']} (n={r['arity']})"]
    verdict = "canalizing" if c["definitional"] else "non-canalizing"
    lines.append(f"verdict    {verdict} (definitional={c['definitional']}, kmap={c['kmap']}, agree={c['agree']})")
    if r["kmap_witness"]:
        i, a, b = r["kmap_witness"]
        lines.append(f"witness    x{i} = {a} forces {b}")
    if r["triples"]:
        lines.append("triples    " + ", ".join(f"(x{i},{a},{b})" for i, a, b in r["triples"]))
    if r["ncf"]:
        lines.append("ncf        yes: " + " -> ".join(f"x{i}={a}:{b}" for i, a, b in r["ncf"]))
    else:
        lines.append("ncf        no")
    if r["depth"]:
        d = r["depth"]
        rem = f", remainder {d['remainder']}" if d["remainder"] is not None else ""
        lines.append(f"depth      {d['depth']} ({d['remainder_class']}{rem})")
    if show_kmap and f.arity >= 2:
        lines.append("")
        lines.append(kmap.render(kmap.build_kmap(f)))
    return "\n".join(lines)


def cmd_classify(args) -> int:
    f = _read_function(args)
    report = classify_report(f)
    if args.json:
        _write(_dump(report), args.out)
    else:
        _write(_classify_text(report, f, args.kmap), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# census / enumerate
# ---------------------------------------------------------------------------

def _require_n(args, lo: int, hi: int) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if not lo <= args.n <= hi:
        raise UsageError(f"--n must be in {lo}..{hi} for this command")
    return args.n


def _census_records(args) -> list[dict]:
    cls = args.cls
    if cls == "canalizing":
        n = _require_n(args, 1, canalizing.CENSUS_MAX_ARITY)
        return [{"arity": n, "class": cls, "count": canalizing.census_canalizing(n, args.jobs)}]
    if cls == "ncf":
        n = _require_n(args, 1, 5)
        return [{"arity": n, "class": cls, "count": len(ncf.enumerate_ncf(n))}]
    n = _require_n(args, 1, 4)
    census = pncf.depth_census(n, args.jobs)
    return [
        {"arity": n, "class": cls, "depth": d, "remainder_class": rc, "count": k}
        for d, sub in sorted(census.items())
        for rc, k in sorted(sub.items())
        if args.depth is None or d == args.depth
    ]


def _csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_census(args) -> int:
    records = _census_records(args)
    if args.json:
        _write("\n".join(_dump(r) for r in records), args.out)
    elif args.csv:
        fields = ["arity", "class", "depth", "remainder_class", "count"] if args.cls == "pncf" else ["arity", "class", "count"]
        _write(_csv(records, fields), args.out)
    elif args.cls == "pncf":
        lines = [f"depth {r['depth']} {r['remainder_class']:<15} {r['count']}" for r in records]
        lines.append(f"total {sum(r['count'] for r in records)}")
        _write("\n".join(lines), args.out)
    else:
        _write(str(records[0]["count"]), args.out)
    return EXIT_OK


def _members(args) -> list[bf.TruthTable]:
    cls = args.cls
    if cls == "canalizing":
        n = _require_n(args, 1, canalizing.CENSUS_MAX_ARITY)
        return canalizing.canalizing_set(n, args.jobs)
    if cls == "ncf":
        n = _require_n(args, 1, 5)
        return sorted(ncf.enumerate_ncf(n), key=lambda f: f.value)
    n = _require_n(args, 1, 4)
    buckets = pncf.depth_classification(n, args.jobs)
    out = []
    for (d, _), fs in buckets.items():
        if d < n and (args.depth is None or d == args.depth):
            out.extend(fs)
    return sorted(out, key=lambda f: f.value)


def cmd_enumerate(args) -> int:
    fs = _members(args)
    if args.json:
        text = "\n".join(_dump({"arity": f.arity, "tt": bf.format_tt(f, args.format)}) for f in fs)
    else:
        text = "\n".join(bf.format_tt(f, args.format) for f in fs)
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def cmd_generate(args) -> int:
    n = _require_n(args, 1, canalizing.CENSUS_MAX_ARITY)
    source = canalizing.canalizing_set(n, args.jobs)
    result, stats = canalizing.generate_next(source, args.jobs)
    record = {"source_arity": n, "arity": n + 1, **asdict(stats), "check_bound": stats.check_bound}
    if args.list_out:
        members = sorted(result, key=lambda f: f.value)
        _write("\n".join(bf.format_tt(f, args.format) for f in members), args.list_out)
    if args.json:
        _write(_dump(record), args.out)
    else:
        _write("\n".join(f"{k:<17} {v}" for k, v in record.items()), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# matrix
# ---------------------------------------------------------------------------

def cmd_matrix(args) -> int:
    n = _require_n(args, 2, 64)
    m = ncf.hd_matrix(n)
    hist = None
    if args.histogram:
        if n > 4:
            raise UsageError("--histogram is exhaustive and limited to n <= 4")
        ok, cells = ncf.histogram_matches(n)
        hist = {"ok": ok, "cells": [[i, j, b, e] for (i, j), (b, e) in sorted(cells.items())]}
    if args.json:
        rec = {"arity": n, "hd": m.hd_labels, "matrix": m.as_lists(), "n_c": m.n_c}
        if hist is not None:
            rec["histogram"] = hist
        _write(_dump(rec), args.out)
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + [f"hd{h}" for h in m.hd_labels])
        for i, row in enumerate(m.rows, start=1):
            w.writerow([i] + list(row))
        _write(buf.getvalue(), args.out)
    else:
        width = max(len(str(v)) for row in m.rows for v in row)
        width = max(width, max(len(str(h)) for h in m.hd_labels))
        lines = ["H.D   " + " ".join(str(h).rjust(width) for h in m.hd_labels)]
        for i, row in enumerate(m.rows, start=1):
            lines.append(f"x{i:<4} " + " ".join(str(v).rjust(width) for v in row))
        lines.append(f"N_c = {m.n_c}")
        if hist is not None:
            lines.append("histogram " + ("matches 4*M" if hist["ok"] else "MISMATCH"))
        _write("\n".join(lines), args.out)
    return EXIT_OK if hist is None or hist["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _parse_only(text: str | None) -> set[int] | None:
    if not text:
        return None
    try:
        nums = {int(t) for t in text.split(",") if t.strip()}
    except ValueError:
        raise UsageError(f"--only expects comma-separated criterion numbers, got {text!r}") from None
    unknown = nums - set(checks.CRITERIA)
    if unknown:
        raise UsageError(f"unknown criteria: {sorted(unknown)}")
    return nums


def cmd_verify(args) -> int:
    only = _parse_only(args.only)
    failed = 0
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        for chk in checks.run_checks(only, seed=args.seed, jobs=args.jobs):
            failed += not chk.passed
            out.write((chk.record() if args.json else chk.line()) + "\n")
            out.flush()
        if not args.json:
            out.write("all checks passed\n" if not failed else f"{failed} check(s) failed\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="arity")
    common.add_argument("--format", choices=("binary", "hex", "int"), default="binary",
                        help="function encoding for input and listed output")
    common.add_argument("--json", action="store_true", help="JSON records, one per line")
    common.add_argument("--csv", action="store_true", help="CSV with a header row")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")

    p = argparse.ArgumentParser(prog="canalkit", description="Canalizing Boolean function toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify one function")
    c.add_argument("--tt", help="truth table (binary, hex or int per --format)")
    c.add_argument("--kmap", action="store_true", help="also print the K-map")
    c.set_defaults(func=cmd_classify)

    for name, func, hlp in (("census", cmd_census, "count a class"),
                            ("enumerate", cmd_enumerate, "list members of a class")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--class", dest="cls", choices=("canalizing", "ncf", "pncf"), default="canalizing")
        s.add_argument("--depth", type=int, help="restrict pncf output to one depth")
        s.set_defaults(func=func)

    g = sub.add_parser("generate", parents=[common], help="build C_{n+1} from C_n by concatenation")
    g.add_argument("--list-out", help="write the generated functions here, one per line")
    g.set_defaults(func=cmd_generate)

    m = sub.add_parser("matrix", parents=[common], help="H.D matrix M_n and N_c")
    m.add_argument("--histogram", action="store_true", help="check exhaustive buckets against 4*M_n (n <= 4)")
    m.set_defaults(func=cmd_matrix)

    v = sub.add_parser("verify", parents=[common], help="run the full reproduction suite")
    v.add_argument("--only", help="comma-separated criterion numbers (default: all)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"canalkit {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
