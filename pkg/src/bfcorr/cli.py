"""Command-line front end: run named identity checks or sweeps, compute
vacuum expectation values and characters, and expose the region-expansion
calculator.  All numeric output is exact rational text.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error.  The default cutoff can be overridden with the BFCORR_CUTOFF
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from .correspondence import (
    CHECK_NAMES,
    IdentityReport,
    VevSpec,
    check_identity,
    vev,
)
from .fock import character_A, character_B
from .partitions import odd_partition_count, partition_count
from .series import expand
from .textio import format_series, parse_rational

DEFAULT_CUTOFF = 10

VERIFY_TARGETS = (
    "cauchy", "schur-pfaffian", "vev-match", "det-formula", "pf-formula",
    "product-formula", "supercommutativity", "heisenberg", "character",
    "ope-residues", "hopf", "all",
)

# target -> check names per model
_TARGET_MAP = {
    "cauchy": {"A": "cauchy"},
    "schur-pfaffian": {"B": "schur-pfaffian"},
    "vev-match": {"A": "vev-match-A", "B": "vev-match-B"},
    "det-formula": {"A": "det-formula-A"},
    "pf-formula": {"B": "pf-formula-B"},
    "product-formula": {"A": "product-formula-A", "B": "product-formula-B"},
    "supercommutativity": {"A": "supercommutativity-A", "B": "supercommutativity-B"},
    "heisenberg": {"A": "heisenberg-from-fermions-A", "B": "twisted-heisenberg-from-fermions-B"},
    "character": {"A": "character-A", "B": "character-B"},
    "ope-residues": {"AB": "ope-residues"},
    "hopf": {"AB": "hopf-relations"},
}


def _default_cutoff() -> int:
    env = os.environ.get("BFCORR_CUTOFF")
    if env:
        try:
            v = int(env)
            if v >= 1:
                return v
        except ValueError:
            pass
    return DEFAULT_CUTOFF


def _default_params(name: str, n: Optional[int], cutoff: int, seed: int, quick: bool) -> Dict:
    params: Dict = {"cutoff": min(cutoff, 6) if quick else cutoff, "seed": seed}
    if name in ("cauchy",):
        params["n"] = n if n is not None else (2 if quick else 3)
    elif name in ("schur-pfaffian", "vev-match-B", "pf-formula-B", "product-formula-B"):
        points = 2 * n if n is not None else (2 if quick else 4)
        params["n"] = points
    elif name in ("det-formula-A", "product-formula-A", "vev-match-A"):
        params["n"] = n if n is not None else 2
    elif name == "heisenberg-from-fermions-A":
        params["mmax"], params["grade"] = (3, 8) if quick else (5, 12)
    elif name == "twisted-heisenberg-from-fermions-B":
        params["mmax"], params["grade"] = (5, 8) if quick else (7, 10)
    elif name == "character-A":
        params["dmax"] = 8 if quick else 12
    elif name == "character-B":
        params["dmax"] = 12 if quick else 20
    elif name in ("ope-residues", "hopf-relations"):
        params["grade"] = 6 if quick else 8
    return params


def _emit_report(report: IdentityReport, fmt: str, timing: bool, out) -> None:
    if not timing:
        report.elapsed_ms = 0
    if fmt == "json":
        out.write(json.dumps(report.to_json_dict(), sort_keys=True) + "\n")
        return
    mark = "PASS" if report.passed else "FAIL"
    plist = ", ".join(f"{k}={v}" for k, v in sorted(report.params.items()) if v is not None)
    out.write(f"[{mark}] {report.name} ({plist}) [{report.elapsed_ms} ms]\n")
    if not report.passed:
        diff = report.witnesses.get("first_difference", "")
        out.write(f"       first difference: {diff}\n")


def _run_verify(args) -> int:
    cutoff = args.cutoff if args.cutoff is not None else _default_cutoff()
    names: List[str] = []
    if args.target == "all":
        for target, per_model in _TARGET_MAP.items():
            names.extend(per_model.values())
    else:
        per_model = _TARGET_MAP[args.target]
        if "AB" in per_model:
            names.append(per_model["AB"])
        elif args.model == "both":
            names.extend(per_model.values())
        else:
            name = per_model.get(args.model)
            if name is None:
                print(f"error: {args.target} has no model {args.model} variant", file=sys.stderr)
                return 2
            names.append(name)
    names = sorted(set(names))
    jobs = [(name, _default_params(name, args.n, cutoff, args.seed, args.quick)) for name in names]

    if args.parallel:
        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(lambda j: check_identity(j[0], j[1]), jobs))
    else:
        reports = [check_identity(name, params) for name, params in jobs]
    reports.sort(key=lambda r: r.name)
    for report in reports:
        _emit_report(report, args.format, not args.no_timing, sys.stdout)
    return 0 if all(r.passed for r in reports) else 1


def _run_vev(args) -> int:
    cutoff = args.cutoff if args.cutoff is not None else _default_cutoff()
    side = "fermion" if args.side == "fermion" else "boson"
    t0 = time.perf_counter()
    if args.model == "A":
        spec = VevSpec.standard_A(side, args.points, cutoff)
    else:
        spec = VevSpec.standard_B(side, args.points, cutoff)
    series = vev(spec)
    elapsed = int((time.perf_counter() - t0) * 1000)
    word = " ".join(f"{sym}({var})" for sym, var in spec.word)
    if args.format == "json":
        payload = {
            "command": "vev",
            "params": {"model": args.model, "side": side, "points": args.points,
                       "cutoff": cutoff, "seed": args.seed},
            "word": word,
            "ordering": list(series.ordering),
            "series": format_series(series),
            "elapsed_ms": 0 if args.no_timing else elapsed,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"<0| {word} |0>  in |{' >> '.join(series.ordering)}|, cutoff {cutoff}")
        print(format_series(series))
    return 0


def _run_character(args) -> int:
    if args.model == "A":
        table = character_A(args.charge, args.charge * args.charge + 2 * args.max)
        oracle = {args.charge * args.charge + 2 * d: partition_count(d) for d in range(args.max + 1)}
        label = "energy2"
    else:
        table = character_B(args.max)
        oracle = {d: 2 * odd_partition_count(d) for d in range(args.max + 1)}
        label = "degree"
    rows = [{label: g, "dim": dim, "oracle": oracle.get(g)} for g, dim in table]
    if args.format == "json":
        payload = {"command": "character", "model": args.model, "rows": rows,
                   "params": {"charge": args.charge if args.model == "A" else None,
                              "max": args.max, "seed": args.seed}}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{label:>8}  dim  oracle")
        for row in rows:
            print(f"{row[label]:>8}  {row['dim']:>3}  {row['oracle']}")
    ok = all(row["dim"] == row["oracle"] for row in rows if row["oracle"] is not None)
    return 0 if ok else 1


def _run_expand(args) -> int:
    cutoff = args.cutoff if args.cutoff is not None else _default_cutoff()
    ordering = [v.strip() for v in args.order.split(",") if v.strip()]
    try:
        f = parse_rational(args.expr, ordering)
        series = expand(f, ordering, cutoff)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"command": "expand", "expr": args.expr,
                          "ordering": ordering, "cutoff": cutoff,
                          "series": format_series(series)}, sort_keys=True))
    else:
        print(format_series(series))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfcorr",
        description="Exact verification engine for the type A and type B "
                    "boson-fermion correspondences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cutoff", type=int, default=None, help="series cutoff D (default 10 or $BFCORR_CUTOFF)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0, help="recorded in reports for reproducibility")
        p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")

    v = sub.add_parser("verify", help="run a named identity check (or all)")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--model", choices=("A", "B", "both"), default="both")
    v.add_argument("--n", type=int, default=None, help="size: pairs for model A, half the points for model B")
    v.add_argument("--quick", action="store_true", help="smaller default sizes")
    v.add_argument("--parallel", action="store_true", help="dispatch checks to a thread pool")
    common(v)
    v.set_defaults(func=_run_verify)

    w = sub.add_parser("vev", help="print a vacuum expectation value series")
    w.add_argument("--model", choices=("A", "B"), required=True)
    w.add_argument("--side", choices=("fermion", "boson"), required=True)
    w.add_argument("--points", type=int, required=True,
                   help="model A: number of phi/psi pairs; model B: number of fields")
    common(w)
    w.set_defaults(func=_run_vev)

    c = sub.add_parser("character", help="graded dimensions against partition oracles")
    c.add_argument("--model", choices=("A", "B"), required=True)
    c.add_argument("--charge", type=int, default=0, help="charge sector (model A)")
    c.add_argument("--max", type=int, default=12, help="top energy (A) or degree (B)")
    common(c)
    c.set_defaults(func=_run_character)

    e = sub.add_parser("expand", help="expand a rational function in a region ordering")
    e.add_argument("--expr", required=True,
                   help="e.g. '(1) / ((z-w)^1)' or 'z^2 - 2*z*w + w^2'")
    e.add_argument("--order", required=True, help="comma-separated variables, largest first")
    common(e)
    e.set_defaults(func=_run_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
