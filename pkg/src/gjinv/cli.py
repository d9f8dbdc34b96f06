"""``gjinv`` command-line front end.

    gjinv invert|det|compare [--input FILE|--demo] [--pivot none|partial|full]
                             [--threshold X] [--mode explicit|compact]
                             [--trace] [--json]

Exit codes: 0 success, 1 singular (or numerical failure), 2 parse/usage error.
``--trace`` writes to stderr so it can be combined with ``--json`` on stdout.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from . import __version__
from .analysis import compare_strategies, residual_norm
from .engine import DEFAULT_THRESHOLD, Mode, PivotStrategy, invert
from .errors import MatrixError, ParseError, SingularError
from .matrix import DenseMatrix, from_rows

EXIT_OK = 0
EXIT_SINGULAR = 1
EXIT_USAGE = 2

# default matrix of the original Turbo C listing
DEMO_MATRIX = ((1.0, 1.0, 1.0), (1.0, 2.0, 3.0), (1.0, 3.0, 6.0))

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_NONFINITE = re.compile(r"[+-]?(?:nan|inf|infinity)", re.IGNORECASE)
_TOKEN = re.compile(r"\S+")


def demo_matrix() -> DenseMatrix:
    return from_rows(DEMO_MATRIX)


def _parse_number(tok: str, line: int, col: int) -> float:
    if _NONFINITE.fullmatch(tok):
        raise ParseError(f"non-finite value {tok!r}", line, col)
    if not _NUMBER.fullmatch(tok):
        raise ParseError(f"invalid number {tok!r}", line, col)
    v = float(tok)
    if not math.isfinite(v):
        raise ParseError(f"non-finite value {tok!r} (overflows a 64-bit float)", line, col)
    return v


def parse_matrix(text: str) -> DenseMatrix:
    """Parse the matrix text format (see docs/format.md)."""
    n = None
    rows: list[list[float]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]
        if n is None:
            tok, col = tokens[0]
            if len(tokens) != 1:
                raise ParseError("dimension line must hold a single integer", lineno, tokens[1][1])
            if not tok.isdigit() or int(tok) < 1:
                raise ParseError(f"invalid dimension {tok!r}, expected a positive integer", lineno, col)
            n = int(tok)
            continue
        if len(rows) == n:
            raise ParseError(f"unexpected extra row, matrix already has {n} rows", lineno, tokens[0][1])
        if len(tokens) != n:
            col = tokens[n][1] if len(tokens) > n else None
            raise ParseError(
                f"row {len(rows) + 1} has {len(tokens)} value{'s' if len(tokens) != 1 else ''}, expected {n}",
                lineno, col)
        rows.append([_parse_number(tok, lineno, col) for tok, col in tokens])
    if n is None:
        raise ParseError("missing dimension line", last_line + 1)
    if len(rows) < n:
        raise ParseError(f"expected {n} rows, found {len(rows)}", last_line + 1)
    return from_rows(rows)


def format_number(v: float, digits: int = 17) -> str:
    return f"{v:.{digits}g}"


def format_matrix(m: DenseMatrix, digits: int = 17) -> str:
    """Inverse of :func:`parse_matrix`; 17 significant digits round-trip exactly."""
    lines = [str(m.n)]
    lines += [" ".join(format_number(v, digits) for v in row) for row in m.rows()]
    return "\n".join(lines) + "\n"


@dataclass
class CliConfig:
    command: str
    input: Optional[str] = None  # path, "-" or None for stdin
    demo: bool = False
    pivot: PivotStrategy = PivotStrategy.FULL
    threshold: float = DEFAULT_THRESHOLD
    mode: Mode = Mode.COMPACT
    trace: bool = False
    json: bool = False
    singular_zero: bool = False

    def __post_init__(self):
        self.pivot = PivotStrategy(self.pivot)
        self.mode = Mode(self.mode)
        if not self.threshold >= 0:
            raise ValueError(f"threshold must be >= 0, got {self.threshold!r}")


def _fmt_rows(rows, width=12, prec=6) -> list[str]:
    return ["  " + " ".join(f"{v:{width}.{prec}f}" for v in r) for r in rows]


class _Tracer:
    """Per-iteration dump of the working storage, after the classic afis() routine.

    Matrices print row-major (the original routine printed the transpose).
    """

    def __init__(self, out: TextIO):
        self.out = out

    def start(self, a: DenseMatrix, strategy: PivotStrategy, mode: Mode):
        print(f"Gauss-Jordan inversion: n={a.n}, pivot={strategy.value}, mode={mode.value}", file=self.out)
        print("Initial matrix", file=self.out)
        print("\n".join(_fmt_rows(a.rows())), file=self.out)
        print(file=self.out)

    def __call__(self, state, choice):
        out = self.out
        print(f"Pivot at step {choice.step}: a({choice.row},{choice.col}) = {choice.value:.6g}", file=out)
        rec = state.log[-1] if state.log and state.log[-1].step == choice.step else None
        if rec and rec.row_swap:
            print(f"  pivoting: swap rows {rec.row_swap[0]} and {rec.row_swap[1]}", file=out)
        if rec and rec.col_swap:
            print(f"  pivoting: swap columns {rec.col_swap[0]} and {rec.col_swap[1]}", file=out)
        print(f"Iteration k={state.k}", file=out)
        if state.mode is Mode.EXPLICIT:
            for left, right in zip(_fmt_rows(state.a_work), _fmt_rows(state.d_work)):
                print(f"{left}  |{right}", file=out)
        else:
            print("\n".join(_fmt_rows(state.x)), file=out)
        print(file=out)

    def finish(self, result):
        out = self.out
        for rec in reversed(result.log):
            if rec.col_swap:
                print(f"De-pivoting: swap rows {rec.col_swap[0]} and {rec.col_swap[1]}", file=out)
            if rec.row_swap:
                print(f"De-pivoting: swap columns {rec.row_swap[0]} and {rec.row_swap[1]}", file=out)
        print("Inverse", file=out)
        print("\n".join(_fmt_rows(result.inverse.rows())), file=out)
        print(file=out)


def _payload(a, cfg, result=None, determinant=None) -> dict:
    return {
        "n": a.n,
        "strategy": cfg.pivot.value,
        "mode": cfg.mode.value,
        "threshold": cfg.threshold,
        "determinant": result.determinant if result else determinant,
        "inverse": result.inverse.rows() if result else None,
        "swaps": [
            {"step": r.step,
             "row_swap": list(r.row_swap) if r.row_swap else None,
             "col_swap": list(r.col_swap) if r.col_swap else None}
            for r in result.log
        ] if result else [],
        "residual_max": residual_norm(a, result.inverse) if result else None,
        "pivots": [[p.row, p.col] for p in result.pivots] if result else [],
    }


def _read_input(cfg: CliConfig, stdin: TextIO) -> DenseMatrix:
    if cfg.demo:
        return demo_matrix()
    if cfg.input in (None, "-"):
        return parse_matrix(stdin.read())
    with open(cfg.input, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def run(cfg: CliConfig, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        a = _read_input(cfg, stdin)
    except ParseError as exc:
        print(f"gjinv: parse error: {exc}", file=stderr)
        return EXIT_USAGE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"gjinv: input error: {exc}", file=stderr)
        return EXIT_USAGE

    if cfg.command == "compare":
        report = compare_strategies(a, cfg.threshold, cfg.mode)
        if cfg.json:
            payload = report.to_dict()
            payload["mode"] = cfg.mode.value
            json.dump(payload, stdout, indent=2)
            stdout.write("\n")
        else:
            print(f"{'strategy':<10}{'outcome':<22}{'residual_max':>24}{'determinant':>26}{'swaps':>7}", file=stdout)
            for s, o in report.outcomes.items():
                outcome = "success" if o.success else f"singular at step {o.failed_step}"
                res = format_number(o.residual_max) if o.success else "-"
                dt = format_number(o.determinant) if o.success else "-"
                print(f"{s.value:<10}{outcome:<22}{res:>24}{dt:>26}{o.swap_count:>7}", file=stdout)
        return EXIT_OK

    tracer = _Tracer(stderr) if cfg.trace else None
    if tracer:
        tracer.start(a, cfg.pivot, cfg.mode)
    try:
        result = invert(a, cfg.pivot, cfg.threshold, cfg.mode, observer=tracer)
    except SingularError as exc:
        if cfg.command == "det" and cfg.singular_zero:
            if cfg.json:
                json.dump(_payload(a, cfg, determinant=0.0), stdout, indent=2)
                stdout.write("\n")
            else:
                print(format_number(0.0), file=stdout)
            return EXIT_OK
        print(f"gjinv: singular: {exc}", file=stderr)
        return EXIT_SINGULAR
    except MatrixError as exc:
        print(f"gjinv: numerical failure: {exc}", file=stderr)
        return EXIT_SINGULAR
    if tracer:
        tracer.finish(result)

    if cfg.json:
        json.dump(_payload(a, cfg, result), stdout, indent=2)
        stdout.write("\n")
    elif cfg.command == "det":
        print(format_number(result.determinant), file=stdout)
    else:
        print(f"# determinant = {format_number(result.determinant)}", file=stdout)
        stdout.write(format_matrix(result.inverse))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="matrix file ('-' for stdin, the default)")
    src.add_argument("--demo", action="store_true", help="use the built-in 3x3 demo matrix")
    common.add_argument("--pivot", choices=[s.value for s in PivotStrategy], default="full")
    common.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                        help="zero threshold for pivots (default %(default)g)")
    common.add_argument("--mode", choices=[m.value for m in Mode], default="compact")
    common.add_argument("--trace", action="store_true", help="print every iteration to stderr")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="gjinv", description="Gauss-Jordan matrix inversion")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invert", parents=[common], help="invert a matrix")
    det = sub.add_parser("det", parents=[common], help="determinant as the product of pivots")
    det.add_argument("--singular-zero", action="store_true", help="print 0 for singular input instead of failing")
    sub.add_parser("compare", parents=[common], help="compare all pivot strategies")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.threshold >= 0:
        parser.error(f"--threshold must be >= 0, got {args.threshold}")
    cfg = CliConfig(
        command=args.command, input=args.input, demo=args.demo,
        pivot=args.pivot, threshold=args.threshold, mode=args.mode,
        trace=args.trace, json=args.json,
        singular_zero=getattr(args, "singular_zero", False),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
