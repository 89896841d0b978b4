"""Command-line front end: read a function table, run analyses, print a report.

Table files hold a header line "p l n k" followed by p^(ln) values in [0, p^k)
in GBFunc index order; lines starting with '#' are ignored.

Exit status: 0 when every verification succeeds, 1 when one fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time

from . import analysis as A
from . import constructions as C
from . import rds as R
from . import selftest
from .cyclotomic import is_prime
from .func import GBFunc

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
_HEADER = re.compile(r"(\d+) (\d+) (\d+) (\d+)")
_INT = re.compile(r"[+-]?\d+")


class TableError(ValueError):
    """A malformed table, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


def parse_table(text: str) -> GBFunc:
    lines = text.splitlines()
    header = None
    values = []
    for lineno, raw in enumerate(lines, start=1):
        if raw.startswith("#"):
            continue
        line = raw.rstrip()
        if header is None:
            if not line:
                continue
            m = _HEADER.fullmatch(line)
            if m is None:
                raise TableError("header must be four integers 'p l n k' separated by single spaces", lineno, 1)
            p, l, n, k = (int(g) for g in m.groups())
            cols = [m.start(i) + 1 for i in range(1, 5)]
            if p < 3 or not is_prime(p):
                raise TableError(f"p must be an odd prime, got {p}", lineno, cols[0])
            for name, val, col in (("l", l, cols[1]), ("n", n, cols[2]), ("k", k, cols[3])):
                if val < 1:
                    raise TableError(f"{name} must be positive", lineno, col)
            if l > k:
                raise TableError(f"need l <= k, got l={l}, k={k}", lineno, cols[1])
            header = (p, l, n, k)
            size, modulus = p ** (l * n), p ** k
            continue
        for tok in re.finditer(r"\S+", line):
            col = tok.start() + 1
            if not _INT.fullmatch(tok.group()):
                raise TableError(f"not an integer: {tok.group()!r}", lineno, col)
            v = int(tok.group())
            if not 0 <= v < modulus:
                raise TableError(f"value {v} outside [0, {modulus})", lineno, col)
            if len(values) == size:
                raise TableError(f"more than {size} values", lineno, col)
            values.append(v)
    if header is None:
        raise TableError("missing header line", len(lines) + 1, 1)
    if len(values) != size:
        raise TableError(f"expected {size} values, found {len(values)}", len(lines) + 1, 1)
    return GBFunc(*header, values)


def emit_table(f: GBFunc) -> str:
    rows = [f"{f.p} {f.l} {f.n} {f.k}"]
    vals = [str(v) for v in f.table.tolist()]
    width = f.radix
    rows += [" ".join(vals[i:i + width]) for i in range(0, len(vals), width)]
    return "\n".join(rows) + "\n"


def _digest(f: GBFunc) -> str:
    return hashlib.sha256(emit_table(f).encode()).hexdigest()


def _verdict(v: A.Verdict) -> dict:
    out = {"ok": v.ok}
    if not v.ok:
        out["witness"] = v.witness
        out["detail"] = v.detail
    return out


# analyses; each adds fields to the report and returns False on a failed verification

def _analyze(f, report, args):
    verdict = A.is_gbent(f)
    report["gbent"] = verdict.ok
    if not verdict:
        report["gbent_witness"] = verdict.witness
        return False
    cls, cert = A.classify_and_dual(f)
    report["regularity"] = cls.kind if cls.sign is None else f"{cls.kind}({cls.sign:+d})"
    report["dual"] = cert.dual.table.tolist()
    report["sign_pattern"] = cert.signs.tolist()
    report["gauss_factor"] = cert.gauss_flag
    return True


def _zpkbent(f, report, args):
    definition = A.is_zpk_bent_definition(f)
    proposition = A.is_zpk_bent_proposition(f)
    report["zpk_bent"] = definition.ok
    report["zpk_bent_paths"] = {"definition": _verdict(definition), "multiples_of_p": _verdict(proposition)}
    return definition.ok and proposition.ok


def _characterize(f, report, args):
    gbent = A.is_gbent(f).ok
    modes = [args.mode] if args.mode else ["A", "B", "C", "D"]
    results = []
    agree = True
    for mode in modes:
        if args.mode and (args.t is not None or args.s is not None):
            pairs = [(args.t or 1, args.s or 2)]
        else:
            pairs = A.legal_parameters(f, mode)
        for t, s in pairs:
            ok, cert = A.characterization_check(f, mode, t, s)
            entry = {"mode": mode, "t": t, "s": s, "verdict": ok, "agrees_with_gbent": ok == gbent}
            if ok:
                entry["certificate"] = {str(u): {"j": e.j, "d": list(e.d), "signs": list(e.signs)}
                                        for u, e in sorted(cert.entries.items())}
            else:
                entry["failure"] = _verdict(cert.failure)
            agree &= ok == gbent
            results.append(entry)
    report["gbent"] = gbent
    report["characterization"] = results
    return agree and gbent


def _rds(f, report, args):
    sub = R.graph_of(f)
    g = sub.group
    if f.n < f.k:
        report["rds"] = {"params": None, "bruteforce": False, "characters": False,
                         "detail": "no integer lambda for n < k"}
        return False
    params = R.graph_parameters(g)
    brute = R.rds_bruteforce(sub, params)
    chars = R.rds_characters(sub, params[3])
    report["rds"] = {"params": list(params), "bruteforce": _verdict(brute), "characters": _verdict(chars)}
    return brute.ok and chars.ok


def _gray(f, report, args):
    if not A.is_gbent(f):
        report["gbent"] = False
        report["gray_plateaued"] = [False, None]
        return False
    v = A.verify_gray_plateaued(f)
    report["gray_plateaued"] = [v.ok, v.witness]
    return v.ok


ANALYSES = {"analyze": _analyze, "zpkbent": _zpkbent, "characterize": _characterize,
            "rds": _rds, "gray": _gray}


def emit_report(report: dict, fmt: str = "structured") -> str:
    if fmt == "structured":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}[{i}]", item)
        else:
            text = " ".join(map(str, value)) if isinstance(value, list) else str(value)
            lines.append(f"{prefix}: {text}")

    walk("", report)
    return "\n".join(lines) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbent", description="Analyze generalized bent functions.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["structured", "plain"], default="structured")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (non-deterministic)")
    for name in ANALYSES:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("table", help="table file, or - for stdin")
        if name == "characterize":
            p.add_argument("--mode", choices=["A", "B", "C", "D"], type=str.upper)
            p.add_argument("--t", type=int)
            p.add_argument("--s", type=int)
    p = sub.add_parser("construct", help="print a table file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spread", nargs=3, type=int, metavar=("P", "M", "K"))
    group.add_argument("--lift", metavar="TABLE", help="p-ary table to lift into Z_{p^k}")
    group.add_argument("--quad", nargs=4, type=int, metavar=("P", "L", "K", "N"))
    p.add_argument("--k", type=int, default=2, help="target exponent for --lift")
    sub.add_parser("selftest", parents=[common])
    return parser


def _construct(args) -> GBFunc:
    if args.spread:
        p, m, k = args.spread
        return C.spread_gbent(C.regular_spread(C.gf_make(p, m)), C.default_balanced_map(p, m, k))
    if args.lift:
        return C.lift_bent(parse_table(_read_input(args.lift)), args.k)
    p, l, k, n = args.quad
    return C.quadratic_gbent_lk(p, l, k, n)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            sys.stdout.write(emit_table(_construct(args)))
            return EXIT_OK
        start = time.perf_counter()
        if args.command == "selftest":
            results = selftest.run_all()
            report = {"selftest": {name: {"passed": a, "total": b} for name, (a, b) in results.items()}}
            ok = all(a == b for a, b in results.values())
        else:
            f = parse_table(_read_input(args.table))
            report = {"input": {"p": f.p, "l": f.l, "n": f.n, "k": f.k, "sha256": _digest(f)}}
            ok = ANALYSES[args.command](f, report, args)
        if args.timings:
            report["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    except TableError as exc:
        print(f"{getattr(args, 'table', None) or getattr(args, 'lift', '')}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
