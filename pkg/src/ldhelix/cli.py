"""Command-line interface: ``ldhelix {generate,verify,foci,delta-seq}``.

Exit status: 0 on success, 1 when a verification check fails, 2 for
invalid arguments or parameter combinations.
"""
from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import curve as cv
from .errors import LDHelixError
from .riccati import HelixParams

COLUMNS = ("s", "x_re", "y_re", "z_re", "x_im", "y_im", "z_im")
PART_COLUMNS = {
    "both": COLUMNS,
    "real": ("s", "x_re", "y_re", "z_re"),
    "imag": ("s", "x_im", "y_im", "z_im"),
}
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_NAMES = {"pi": math.pi, "e": math.e, "delta0": cv.delta_sequence(0)[0]}
_FUNCS = {"sqrt": math.sqrt}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}


def number(text: str) -> float:
    """Parse a float or a small arithmetic expression such as ``sqrt(125)`` or ``-delta0/2``."""
    try:
        return float(text)
    except ValueError:
        pass

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _FUNCS and len(node.args) == 1 and not node.keywords):
            return _FUNCS[node.func.id](ev(node.args[0]))
        raise ValueError

    try:
        return float(ev(ast.parse(text, mode="eval").body))
    except (SyntaxError, ValueError, ZeroDivisionError, OverflowError):
        raise argparse.ArgumentTypeError(f"not a number or supported expression: {text!r}")


@dataclass
class RunConfig:
    subcommand: str
    case_id: int = 1
    k: float = 1.0
    c: float = 1.0
    delta: float = 0.0
    s_min: float = -math.sqrt(50.0)
    s_max: float = math.sqrt(50.0)
    samples: int = 1000
    part: str = "both"
    format: str = "csv"
    output: str = "-"
    figure: str | None = None
    rezero: bool = False

    @property
    def params(self) -> HelixParams:
        return HelixParams(self.k, self.c, self.delta)


def fmt(v: float) -> str:
    """17 significant digits; round-trips every double."""
    return f"{v:.17g}"


def curve_table(curve: cv.Curve, part: str = "both") -> tuple[tuple[str, ...], np.ndarray]:
    full = np.column_stack([curve.s, curve.real, curve.imag])
    cols = PART_COLUMNS[part]
    return cols, full[:, [COLUMNS.index(c) for c in cols]]


def to_csv(curve: cv.Curve, part: str = "both") -> str:
    cols, rows = curve_table(curve, part)
    lines = [",".join(cols)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def to_json(curve: cv.Curve, part: str = "both") -> str:
    cols, rows = curve_table(curve, part)
    p = curve.params
    head = {
        "params": {"k": p.k, "c": p.c, "delta": p.delta},
        "case": curve.case_id,
        "part": part,
        "columns": list(cols),
    }
    body = ",\n    ".join("[" + ", ".join(fmt(v) for v in row) + "]" for row in rows)
    return json.dumps(head, indent=2)[:-2] + ',\n  "samples": [\n    ' + body + "\n  ]\n}\n"


def read_csv(text: str) -> tuple[list[str], np.ndarray]:
    """Parse output of :func:`to_csv` back into (columns, values)."""
    lines = text.strip().splitlines()
    cols = lines[0].split(",")
    vals = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float)
    return cols, vals.reshape(-1, len(cols))


def _write(text: str, output: str):
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_generate(cfg: RunConfig) -> int:
    # half-open grid [s_min, s_max): with the symmetric default range and an
    # even sample count the s = 0 node is present
    curve = cv.sample_curve(cfg.case_id, cfg.params, cfg.s_min, cfg.s_max, cfg.samples,
                            endpoint=False, rezero=cfg.rezero)
    text = to_csv(curve, cfg.part) if cfg.format == "csv" else to_json(curve, cfg.part)
    _write(text, cfg.output)
    if cfg.figure:
        from .plotting import plot_curve
        plot_curve(curve, cfg.figure, cfg.part)
    return EXIT_OK


def cmd_verify(suite: str) -> int:
    from . import verify
    checks = verify.run(suite)
    for chk in checks:
        print(chk.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_foci(cfg: RunConfig) -> int:
    f = cv.foci(cfg.case_id, cfg.params)
    print("limit,x,y")
    print(f"+inf,{fmt(f.plus[0])},{fmt(f.plus[1])}")
    print(f"-inf,{fmt(f.minus[0])},{fmt(f.minus[1])}")
    print(f"# {f.bisectrix.value} bisectrix")
    return EXIT_OK


def cmd_delta_seq(n_max: int, c: float) -> int:
    print("n,delta_n")
    for n, d in enumerate(cv.delta_sequence(n_max, c)):
        print(f"{n},{fmt(d)}")
    return EXIT_OK


def _params_args(p: argparse.ArgumentParser):
    p.add_argument("--case", dest="case_id", type=int, default=1, choices=(1, 2, 3, 4))
    p.add_argument("--k", type=number, default=1.0, help="curvature/torsion ratio")
    p.add_argument("--c", type=number, default=1.0, help="dilation length (> 0)")
    p.add_argument("--delta", type=number, default=0.0,
                   help="arclength shift (k = 1 only); accepts e.g. delta0, delta0/2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldhelix", description="Clothoid helices from the Lie-Darboux Riccati equation.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    g = sub.add_parser("generate", help="sample a curve and write CSV or JSON")
    _params_args(g)
    g.add_argument("--s-min", type=number, default=None, help="default: -s_max")
    g.add_argument("--s-max", type=number, default=math.sqrt(50.0), help="default: sqrt(50)")
    g.add_argument("--samples", type=int, default=1000)
    g.add_argument("--part", choices=("real", "imag", "both"), default="both")
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--output", "-o", default="-")
    g.add_argument("--figure", default=None, help="also render projections to this image file")
    g.add_argument("--rezero", action="store_true", help="shift shifted helices so C(0) = 0")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("fresnel", "riccati", "tangent", "curve", "frenet", "all"), default="all")

    f = sub.add_parser("foci", help="print the foci of a case-1/2 helix")
    _params_args(f)

    d = sub.add_parser("delta-seq", help="print shifts delta_n that put the foci on a bisectrix")
    d.add_argument("--n-max", type=int, default=5)
    d.add_argument("--c", type=number, default=1.0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "verify":
            return cmd_verify(args.suite)
        if args.subcommand == "delta-seq":
            return cmd_delta_seq(args.n_max, args.c)
        cfg = RunConfig(subcommand=args.subcommand, case_id=args.case_id, k=args.k, c=args.c, delta=args.delta)
        if args.subcommand == "foci":
            return cmd_foci(cfg)
        cfg.s_max = args.s_max
        cfg.s_min = -args.s_max if args.s_min is None else args.s_min
        cfg.samples, cfg.part, cfg.format = args.samples, args.part, args.format
        cfg.output, cfg.figure, cfg.rezero = args.output, args.figure, args.rezero
        return cmd_generate(cfg)
    except LDHelixError as exc:
        print(f"ldhelix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
