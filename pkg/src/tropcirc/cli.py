"""Command-line front end.  All output is JSON on stdout.

Exit codes: 0 success, 1 a checked property failed, 2 usage or input error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Sequence

from . import serialize
from .bridge import beta_max, diagonal_filling, reading_word, verify_bjs, verify_stanley_dominance, verify_theorem_main, w_from_skew
from .circuits import build_schur_circuit, build_skew_circuit, build_stanley_circuit, circuit_eval, gate_count
from .combinatorics import (
    Permutation,
    SkewShape,
    format_partition,
    parse_partition,
    parse_permutation,
    reduced_words,
    subpartitions,
)
from .errors import ResourceLimitError, term_cap_from_env
from .newton import elementary_minkowski_points, hull_lattice_points, permutahedron_points, snp_check, support
from .sympoly import schur, schur_expand, skew_schur, stanley_poly
from .tropical import MODES, trop_equal, tropicalize

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Out:
    def __init__(self, pretty: bool):
        self.pretty = pretty

    def emit(self, obj) -> None:
        sys.stdout.write(serialize.dumps(obj, self.pretty) + "\n")
        sys.stdout.flush()


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _shape(args) -> SkewShape:
    return SkewShape(parse_partition(args.lam), parse_partition(args.mu or ""))


# -- single-shot commands --------------------------------------------------


def cmd_skew_schur(args, out: _Out) -> int:
    out.emit(serialize.polynomial_to_json(skew_schur(_shape(args), args.vars)))
    return EXIT_OK


def cmd_schur_expand(args, out: _Out) -> int:
    f = serialize.polynomial_from_json(_read_json(args.infile))
    out.emit(serialize.expansion_to_json(schur_expand(f)))
    return EXIT_OK


def cmd_stanley(args, out: _Out) -> int:
    out.emit(serialize.polynomial_to_json(stanley_poly(parse_permutation(args.perm), args.vars)))
    return EXIT_OK


def cmd_beta_max(args, out: _Out) -> int:
    out.emit(format_partition(beta_max(parse_permutation(args.perm))))
    return EXIT_OK


def cmd_skew_to_perm(args, out: _Out) -> int:
    shape = _shape(args)
    out.emit({
        "shape": str(shape),
        "reading_word": list(reading_word(diagonal_filling(shape))),
        "perm": ",".join(map(str, w_from_skew(shape))),
    })
    return EXIT_OK


def cmd_trop_equal(args, out: _Out) -> int:
    load = serialize.tropical_from_json
    if args.classical:
        def load(data):
            return tropicalize(serialize.polynomial_from_json(data))
    lhs, rhs = load(_read_json(args.lhs)), load(_read_json(args.rhs))
    out.emit({"equal": trop_equal(lhs, rhs, args.mode), "mode": args.mode})
    return EXIT_OK


def cmd_circuit_build(args, out: _Out) -> int:
    if args.kind == "stanley":
        if not args.perm:
            raise ValueError("--kind stanley needs --perm")
        C = build_stanley_circuit(parse_permutation(args.perm), args.vars)
    else:
        if args.lam is None:
            raise ValueError(f"--kind {args.kind} needs --lambda")
        if args.kind == "schur":
            C = build_schur_circuit(parse_partition(args.lam), args.vars)
        else:
            C = build_skew_circuit(_shape(args), args.vars)
    data = serialize.circuit_to_json(C)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize.dumps(data) + "\n")
        out.emit({"out": args.out, "stats": gate_count(C).as_dict()})
    else:
        out.emit(data)
    return EXIT_OK


def cmd_circuit_eval(args, out: _Out) -> int:
    C = serialize.circuit_from_json(_read_json(args.circuit))
    point = [Fraction(t) for t in args.point.split(",")] if args.point.strip() else []
    out.emit(str(circuit_eval(C, point)))
    return EXIT_OK


def cmd_circuit_stats(args, out: _Out) -> int:
    C = serialize.circuit_from_json(_read_json(args.circuit))
    out.emit(gate_count(C).as_dict())
    return EXIT_OK


# -- sweeps ----------------------------------------------------------------


def _theorem_line(task: tuple[SkewShape, int]) -> dict:
    shape, n = task
    report = verify_theorem_main(shape, n)
    return {**report.as_dict(), "passed": report.passed}


def _stanley_schur_line(task: tuple[SkewShape, int]) -> dict:
    shape, n = task
    return {"shape": str(shape), "n": n, "equal": verify_bjs(shape, n)}


def _dominance_line(w: Permutation) -> dict:
    return {
        "perm": ",".join(map(str, w)),
        "beta_max": format_partition(beta_max(w)),
        "reduced_words": len(reduced_words(w)),
        "ok": verify_stanley_dominance(w, w.length()),
    }


def _stream(fn: Callable[[object], dict], tasks: Sequence, jobs: int, ok_key: str, out: _Out) -> int:
    failed = 0
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            lines: Iterable[dict] = pool.map(fn, tasks, chunksize=16)
            for line in lines:
                failed += not line[ok_key]
                out.emit(line)
    else:
        for task in tasks:
            line = fn(task)
            failed += not line[ok_key]
            out.emit(line)
    sys.stderr.write(serialize.dumps({"instances": len(tasks), "failed": failed}) + "\n")
    return EXIT_FAILED if failed else EXIT_OK


def _skew_tasks(max_lambda: str, n: int) -> list[tuple[SkewShape, int]]:
    tasks = []
    for lam in subpartitions(parse_partition(max_lambda)):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            # nonzero in n variables iff no column is longer than n
            if max(shape.column_lengths(), default=0) <= n:
                tasks.append((shape, n))
    return tasks


def cmd_verify_trop_sweep(args, out: _Out) -> int:
    return _stream(_theorem_line, _skew_tasks(args.max_lambda, args.vars), args.jobs, "passed", out)


def cmd_verify_stanley_schur_sweep(args, out: _Out) -> int:
    return _stream(_stanley_schur_line, _skew_tasks(args.max_lambda, args.vars), args.jobs, "equal", out)


def cmd_verify_stanley_dominance(args, out: _Out) -> int:
    m = args.symmetric_group
    if m < 1:
        raise ValueError("--symmetric-group must be positive")
    tasks = [Permutation(p) for p in permutations(range(1, m + 1))]
    return _stream(_dominance_line, tasks, args.jobs, "ok", out)


def cmd_verify_rado(args, out: _Out) -> int:
    lam, n = parse_partition(args.lam), args.vars
    f = schur(lam, n)
    if f.is_zero():
        raise ValueError(f"s_{format_partition(lam)} vanishes in {n} variables")
    hull = hull_lattice_points(support(f), term_cap_from_env())
    perm = permutahedron_points(lam, n)
    report = {
        "lambda": format_partition(lam),
        "vars": n,
        "points": len(perm),
        "hull_equals_permutahedron": hull == perm,
        "snp": snp_check(f, term_cap_from_env()),
    }
    out.emit(report)
    return EXIT_OK if report["hull_equals_permutahedron"] and report["snp"] else EXIT_FAILED


def cmd_verify_minkowski(args, out: _Out) -> int:
    lam, n = parse_partition(args.lam), args.vars
    perm = permutahedron_points(lam, n)
    summed = elementary_minkowski_points(lam, n)
    report = {"lambda": format_partition(lam), "vars": n, "points": len(perm), "equal": perm == summed}
    out.emit(report)
    return EXIT_OK if report["equal"] else EXIT_FAILED


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcirc", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_args(p, need_lambda=True):
        p.add_argument("--lambda", dest="lam", required=need_lambda, help="outer partition, e.g. 2,1")
        p.add_argument("--mu", default="", help="inner partition (default empty)")

    p = sub.add_parser("skew-schur")
    shape_args(p)
    p.add_argument("--vars", type=int, required=True)
    p.set_defaults(func=cmd_skew_schur)

    p = sub.add_parser("schur-expand")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_schur_expand)

    p = sub.add_parser("stanley")
    p.add_argument("--perm", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("beta-max")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_beta_max)

    p = sub.add_parser("skew-to-perm")
    shape_args(p)
    p.set_defaults(func=cmd_skew_to_perm)

    p = sub.add_parser("trop-equal")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--mode", choices=MODES, default="axiomatic")
    p.add_argument("--classical", action="store_true", help="inputs are integer polynomials; tropicalize first")
    p.set_defaults(func=cmd_trop_equal)

    circ = sub.add_parser("circuit").add_subparsers(dest="circuit_command", required=True)
    p = circ.add_parser("build")
    p.add_argument("--kind", choices=("schur", "skew", "stanley"), required=True)
    shape_args(p, need_lambda=False)
    p.add_argument("--perm")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_circuit_build)
    p = circ.add_parser("eval")
    p.add_argument("--circuit", required=True)
    p.add_argument("--point", required=True, help='comma-separated rationals, e.g. "1/2,3"')
    p.set_defaults(func=cmd_circuit_eval)
    p = circ.add_parser("stats")
    p.add_argument("--circuit", required=True)
    p.set_defaults(func=cmd_circuit_stats)

    ver = sub.add_parser("verify").add_subparsers(dest="verify_command", required=True)
    for name, func in (("theorem13", cmd_verify_trop_sweep), ("bjs", cmd_verify_stanley_schur_sweep)):
        p = ver.add_parser(name)
        p.add_argument("--max-lambda", required=True)
        p.add_argument("--vars", type=int, required=True)
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=func)
    p = ver.add_parser("stanley-dominance")
    p.add_argument("--symmetric-group", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_stanley_dominance)
    for name, func in (("rado", cmd_verify_rado), ("minkowski", cmd_verify_minkowski)):
        p = ver.add_parser(name)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--vars", type=int, required=True)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Out(args.pretty)
    try:
        return args.func(args, out)
    except BrokenPipeError:
        # downstream reader went away (e.g. `| head`)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except ResourceLimitError as exc:
        sys.stderr.write(serialize.dumps({"error": "resource", "message": str(exc)}) + "\n")
        return EXIT_RESOURCE
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(serialize.dumps({"error": "usage", "message": str(exc)}) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
