"""Command-line entry point: ``dnumbers compute | verify | matrix``.

Exit codes: 0 ok, 2 parse error, 3 validation error, 4 size cap exceeded,
5 theorem violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import measures
from .errors import ParseError, SizeCapError, ValidationError
from .frame import Frame
from .instance import Instance, load, parse_subset
from .measures import THEOREMS, check_vectors
from .nonexclusivity import MAX_DENSE_SIZE, Strategy, matrix
from .dnumber import d_vector
from .oracle import MAX_RANDOM_SIZE, random_instance

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_SIZE = 4
EXIT_VIOLATION = 5


def fmt(x: float) -> str:
    """12 significant digits, no negative zero."""
    return format(float(x) + 0.0, ".12g")


def fmt3(x: float) -> str:
    return format(float(x) + 0.0, ".3g")


def _json_num(x: float) -> float:
    return float(fmt(x))


def _csv(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _require_dense(frame: Frame, what: str, limit: int = MAX_DENSE_SIZE) -> None:
    if frame.size > limit:
        raise SizeCapError(f"{what} needs frame size <= {limit}, got {frame.size}")


# -- compute -----------------------------------------------------------------


def cmd_compute(inst: Instance, subset: str | None, out_format: str) -> str:
    frame, d, ne = inst.frame, inst.dnumber, inst.nonexclusivity
    if subset is not None:
        a = parse_subset(frame, subset)
        iv = measures.belief_interval(d, ne, a)
        results = [(a, iv.lower, iv.upper)]
    else:
        _require_dense(frame, "a full Bel/Pl table")
        bel_vec, pl_vec = measures.measure_vectors(d, ne)
        results = [(a, float(bel_vec[a]), float(pl_vec[a])) for a in range(frame.n_subsets)]

    if out_format == "json":
        doc = {
            "frame": list(frame.labels),
            "total_mass": _json_num(d.total_mass),
            "strategy": ne.strategy.value,
            "rows": [
                {
                    "subset": frame.format_subset(a),
                    "bel": _json_num(b),
                    "pl": _json_num(p),
                    "width": _json_num(p - b),
                }
                for a, b, p in results
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    rows = [["subset", "bel", "pl", "width"]]
    rows += [[frame.format_subset(a), fmt(b), fmt(p), fmt(p - b)] for a, b, p in results]
    return _csv(rows) if out_format == "csv" else _table(rows)


# -- verify ------------------------------------------------------------------


def _check_rows(worsts: Sequence[tuple[float, str]]) -> list[list[str]]:
    rows = [["law", "statement", "worst", "tolerance", "witness", "status"]]
    for (name, statement, tol), (worst, witness) in zip(THEOREMS, worsts):
        rows.append([name, statement, fmt(worst), format(tol, "g"), witness,
                     "PASS" if worst <= tol else "FAIL"])
    return rows


def fuzz_plan(n: int, seed: int) -> list[tuple[int, int, Strategy, bool]]:
    """``(instance_seed, frame_size, strategy, complete)`` for each fuzz case."""
    seeds = np.random.default_rng(seed).integers(0, 2**63, size=n)
    strategies = list(Strategy)
    plan = []
    for i, s in enumerate(seeds):
        size = 1 + i % MAX_RANDOM_SIZE
        strategy = strategies[(i // MAX_RANDOM_SIZE) % len(strategies)]
        complete = (i // (MAX_RANDOM_SIZE * len(strategies))) % 2 == 0
        plan.append((int(s), size, strategy, complete))
    return plan


def cmd_verify(inst: Instance, fuzz: int, seed: int) -> tuple[str, bool]:
    frame = inst.frame
    report = measures.verify_theorems(inst.dnumber, inst.nonexclusivity)
    out = [
        f"frame: {'|'.join(frame.labels)} (N={frame.size})",
        f"strategy: {inst.nonexclusivity.strategy.value}",
        f"total mass s: {fmt(report.total_mass)}",
        "",
    ]
    worsts = [(c.worst, frame.format_subset(c.witness)) for c in report.checks]
    out.append(_table(_check_rows(worsts)).rstrip("\n"))
    ok = report.passed

    if fuzz:
        best: list[tuple[float, str]] = [(-np.inf, "-")] * len(THEOREMS)
        failing = 0
        for i, (s, size, strategy, complete) in enumerate(fuzz_plan(fuzz, seed)):
            d, ne = random_instance(s, size, strategy, complete)
            bel_vec, pl_vec = measures.measure_vectors(d, ne)
            results = check_vectors(bel_vec, pl_vec, d.total_mass)
            bad = False
            for k, ((worst, witness), (_, _, tol)) in enumerate(zip(results, THEOREMS)):
                bad |= worst > tol
                if worst > best[k][0]:
                    best[k] = (worst, f"#{i}:{d.frame.format_subset(witness)}")
            failing += bad
        out += [
            "",
            f"fuzz: {fuzz} instances, seed {seed}, {failing} failing",
            _table(_check_rows(best)).rstrip("\n"),
        ]
        ok = ok and failing == 0
    out += ["", f"result: {'PASS' if ok else 'FAIL'}"]
    return "\n".join(out) + "\n", ok


# -- matrix ------------------------------------------------------------------


def cmd_matrix(inst: Instance, out_format: str) -> str:
    frame, d, ne = inst.frame, inst.dnumber, inst.nonexclusivity
    _require_dense(frame, "the dense U matrix")
    u = matrix(ne)
    dv = d_vector(d)
    pl_vec = measures.pl_vector(d, ne)
    du = dv @ u
    residual = float(np.max(np.abs(pl_vec - du)))
    names = [frame.format_subset(a) for a in range(frame.n_subsets)]

    if out_format == "json":
        doc = {
            "subsets": names,
            "U": [[_json_num(x) for x in row] for row in u],
            "D": [_json_num(x) for x in dv],
            "Pl": [_json_num(x) for x in pl_vec],
            "D.U": [_json_num(x) for x in du],
            "residual": float(fmt3(residual)),
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    rows = [["row"] + names]
    rows += [[f"U:{names[i]}"] + [fmt(x) for x in u[i]] for i in range(len(names))]
    rows.append(["D"] + [fmt(x) for x in dv])
    rows.append(["Pl"] + [fmt(x) for x in pl_vec])
    rows.append(["D.U"] + [fmt(x) for x in du])
    rows.append(["max|Pl-D.U|", fmt3(residual)])
    return _csv(rows)


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnumbers",
        description="Belief and plausibility measures for D numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Bel/Pl table or a single belief interval")
    p.add_argument("path")
    p.add_argument("--subset", help="subset expression such as 'a|c'")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p = sub.add_parser("verify", help="check the four Bel/Pl laws on every subset")
    p.add_argument("path")
    p.add_argument("--fuzz", type=int, default=0, metavar="N",
                   help="also check N seeded random instances")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("matrix", help="export U, the D vector, Pl and the D.U residual")
    p.add_argument("path")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = load(args.path)
        if args.command == "compute":
            text, code = cmd_compute(inst, args.subset, args.format), EXIT_OK
        elif args.command == "verify":
            if args.fuzz < 0:
                raise ParseError("--fuzz must be non-negative")
            text, ok = cmd_verify(inst, args.fuzz, args.seed)
            code = EXIT_OK if ok else EXIT_VIOLATION
        else:
            text, code = cmd_matrix(inst, args.format), EXIT_OK
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
