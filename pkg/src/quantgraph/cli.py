"""Command line front end.

Exit codes: 0 success, 1 computational failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import os
import re
import sys
import tempfile
from typing import Sequence

import numpy as np

from . import document
from .errors import DocumentError, QuantGraphError, SymmetryUnavailableError
from .graph_core import effective_topology
from .holonomy import BranchTarget, SweepPlan, amplitude_sweep, berry_phase, track_branch
from .spectral import ScanOptions, SecularProblem, eigenspace_at, find_eigenvalues, symmetry_sector
from .vertex_ops import induced_blocks

_THETA = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_angle(text: str) -> float:
    """Radians, or multiples of pi such as ``pi/2``, ``3pi/2``, ``2pi``, ``0.25*pi``."""
    m = _THETA.match(text)
    if m:
        coef = m.group(1)
        if coef in ("", "+"):
            c = 1.0
        elif coef == "-":
            c = -1.0
        else:
            c = float(coef)
        d = float(m.group(2)) if m.group(2) else 1.0
        return c * math.pi / d
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid angle {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite, got {text!r}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def fmt(value) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, str):
        return value
    x = float(value)
    if not math.isfinite(x):
        raise QuantGraphError(f"refusing to write non-finite value {x}")
    if x == 0.0:
        x = 0.0
    return f"{x:.15g}"


def write_table(header: Sequence[str], rows, out: str | None) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    text = buf.getvalue()
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".quantgraph-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _document(args) -> document.GraphDocument:
    if args.graph:
        if args.l1 is not None or args.l2 is not None:
            raise DocumentError("--graph and --l1/--l2 are mutually exclusive")
        return document.load(args.graph)
    return document.figure_eight_document(args.l1 or 1.0, args.l2 or 1.0)


def _problem(doc: document.GraphDocument, theta: float) -> SecularProblem:
    conds = doc.family()(theta)
    return SecularProblem(doc.graph, conds, theta=theta if doc.builtin else None)


def cmd_spectrum(args) -> int:
    doc = _document(args)
    problem = _problem(doc, args.theta)
    roots = find_eigenvalues(problem, 0.0, args.kmax, ScanOptions(tol=args.tol))
    write_table(["k", "lambda", "multiplicity"], [(k, k * k, m) for k, m in roots], args.out)
    return 0


def cmd_eigenfunctions(args) -> int:
    doc = _document(args)
    problem = _problem(doc, args.theta)
    rows = []
    for k, _ in find_eigenvalues(problem, 0.0, args.kmax, ScanOptions(tol=args.tol)):
        space = eigenspace_at(problem, k, args.tol)
        try:
            parts = symmetry_sector(space)
        except SymmetryUnavailableError:
            parts = [("none", space)]
        for sector, sub in parts:
            for member, amp in enumerate(sub.real_amplitudes()):
                for edge, (a, b) in enumerate(amp, start=1):
                    rows.append((k, sector, member, edge, a, b))
    write_table(["k", "sector", "member", "edge", "a", "b"], rows, args.out)
    return 0


def _plan(args, doc) -> SweepPlan:
    return SweepPlan(doc.family(), doc.graph, args.steps, BranchTarget(args.n, args.sector))


def cmd_sweep(args) -> int:
    doc = _document(args)
    if doc.builtin != "figure8_theta":
        raise DocumentError("sweep needs the builtin figure8_theta family")
    table = amplitude_sweep(_plan(args, doc))
    write_table(["theta", "k", "a1", "a2"], table.rows(), args.out)
    return 0


def cmd_berry(args) -> int:
    doc = _document(args)
    plan = _plan(args, doc)
    result = berry_phase(track_branch(plan, args.tol))
    lines = [
        f"branch n={args.n} sector={args.sector} steps={args.steps} dimension={len(result.eigenphases)}",
        "eigenphases: " + " ".join(fmt(p) for p in result.eigenphases),
    ]
    for p, c in zip(result.eigenphases, result.classification):
        if c == "nontrivial":
            lines.append("phase = π (nontrivial)")
        elif c == "trivial":
            lines.append("phase = 0 (trivial)")
        else:
            lines.append(f"phase = {fmt(p)} (unquantized)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_topology(args) -> int:
    doc = _document(args)
    conds = doc.family()(args.theta)
    blocks = induced_blocks(doc.graph, conds)
    summary = effective_topology(doc.graph, blocks)
    text = (
        "blocks: " + ",".join("{" + ",".join(map(str, b)) + "}" for b in summary.blocks) + "\n"
        f"components: {summary.components}\n"
        f"betti1: {summary.betti1}\n"
    )
    _emit(text, args.out)
    return 0


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quantgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", metavar="PATH", help="JSON graph document")
    common.add_argument("--l1", type=_positive_float, help="figure-eight edge 1 length (no --graph)")
    common.add_argument("--l2", type=_positive_float, help="figure-eight edge 2 length (no --graph)")
    common.add_argument("--tol", type=_positive_float, default=None, help="relative singular-value tolerance")
    common.add_argument("--out", metavar="PATH", help="output file (default stdout)")

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues up to kmax")
    p.add_argument("--theta", type=parse_angle, default=0.0)
    p.add_argument("--kmax", type=_positive_float, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("eigenfunctions", parents=[common], help="real eigenfunction amplitudes up to kmax")
    p.add_argument("--theta", type=parse_angle, default=0.0)
    p.add_argument("--kmax", type=_positive_float, required=True)
    p.set_defaults(func=cmd_eigenfunctions)

    for name, func, sectors, steps in (
        ("sweep", cmd_sweep, ("even", "odd"), 512),
        ("berry", cmd_berry, ("even", "odd", "full"), 256),
    ):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--n", type=int, default=1, help="branch index (0 = ground state)")
        p.add_argument("--sector", choices=sectors, default="even")
        p.add_argument("--steps", type=int, default=steps)
        p.set_defaults(func=func)

    p = sub.add_parser("topology", parents=[common], help="vertex blocks, components and cycle rank")
    p.add_argument("--theta", type=parse_angle, default=0.0)
    p.set_defaults(func=cmd_topology)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) < 0:
        parser.error("--n must be >= 0")
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"quantgraph: error: {exc}", file=sys.stderr)
        return 2
    except QuantGraphError as exc:
        print(f"quantgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        suggested = getattr(exc, "suggested_steps", None)
        if suggested:
            print(f"quantgraph: hint: rerun with --steps {suggested}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"quantgraph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
