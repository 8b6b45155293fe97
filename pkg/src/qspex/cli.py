"""Command-line surface: every library operation behind graph6 I/O.

Exit codes: 0 success, 1 domain error (bad graph6, infeasible or failing
query, violated rewiring precondition), 2 usage error (bad flags, bad
QSPEX_GUARD, out-of-range tolerance).  All numeric output carries 12
significant digits.  Graphs are given as graph6 strings; `-` reads them one
per line from stdin.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .family import extremal_beta1, extremal_params, predicted_extremal
from .graphs import Graph6Error, canonical_graph, from_graph6, to_graph6
from .search import DEFAULT_GUARD, EnumerationQuery, enumerate_graphs, hill_climb
from .spectral import RESIDUAL_TOL, q_radius
from .matching import matching_number
from .transform import kelmans_swap, pendant_collapse, rotate
from .verify import emit_report, verify_beta1, verify_theorem1

MAX_GUARD = 12


class UsageError(Exception):
    """Bad invocation (flags/environment), as opposed to a domain failure."""


@dataclass
class CliConfig:
    tolerance: float = RESIDUAL_TOL
    guard: int = DEFAULT_GUARD
    workers: int = 1
    format: str = "json"
    output: Optional[str] = None

    def validate(self) -> "CliConfig":
        if not 1 <= self.guard <= MAX_GUARD:
            raise UsageError(f"guard must be within 1..{MAX_GUARD}, got {self.guard}")
        if not 1e-14 <= self.tolerance <= 1e-6:
            raise UsageError(
                f"tolerance must lie in [1e-14, 1e-6], got {self.tolerance!r}"
            )
        if self.workers < 1:
            raise UsageError(f"workers must be >= 1, got {self.workers}")
        if self.format not in ("json", "csv"):
            raise UsageError(f"format must be json or csv, got {self.format!r}")
        return self


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _config(args: argparse.Namespace) -> CliConfig:
    guard = getattr(args, "guard", None)
    if guard is None:
        env = os.environ.get("QSPEX_GUARD")
        if env is None:
            guard = DEFAULT_GUARD
        else:
            try:
                guard = int(env)
            except ValueError:
                raise UsageError(f"QSPEX_GUARD must be an integer, got {env!r}") from None
    tolerance = getattr(args, "tolerance", None)
    return CliConfig(
        tolerance=RESIDUAL_TOL if tolerance is None else tolerance,
        guard=guard,
        workers=getattr(args, "workers", 1) or 1,
        format=getattr(args, "format", "json") or "json",
        output=getattr(args, "output", None),
    ).validate()


def _input_graphs(items: list[str]) -> list[str]:
    out: list[str] = []
    for item in items:
        if item == "-":
            out.extend(line.strip() for line in sys.stdin if line.strip())
        else:
            out.append(item)
    if not out:
        raise UsageError("no graphs supplied")
    return out


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected a vertex pair like 0,1; got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"vertex pair must be integers; got {text!r}") from None


def _parse_edge_list(text: str) -> list[tuple[int, int]]:
    return [_parse_pair(chunk) for chunk in text.split(";") if chunk]


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (output lines, exit code)
# ---------------------------------------------------------------------------


def _cmd_q(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    graphs = _input_graphs(args.graphs)
    batch = len(graphs) > 1
    lines = []
    for g6 in graphs:
        s = q_radius(from_graph6(g6), residual_tol=cfg.tolerance)
        fields = [
            _fmt(s.q),
            ",".join(_fmt(v) for v in s.x),
            _fmt(s.residual),
        ]
        if batch:
            fields.insert(0, g6)
        lines.append("\t".join(fields))
    return lines, 0


def _cmd_beta(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    graphs = _input_graphs(args.graphs)
    batch = len(graphs) > 1
    lines = []
    for g6 in graphs:
        value = matching_number(from_graph6(g6))
        lines.append(f"{g6}\t{value}" if batch else str(value))
    return lines, 0


def _cmd_extremal(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    if args.beta == 1:
        q, graphs = extremal_beta1(args.m)
        lines = [f"graph6 {to_graph6(canonical_graph(g))}" for g in graphs]
        lines.append(f"q {_fmt(q)}")
        return lines, 0
    p = extremal_params(args.m, args.beta)
    g = canonical_graph(predicted_extremal(args.m, args.beta))
    q = q_radius(g).q
    return (
        [
            f"params a={p.a} b={p.b} c={p.c} d={p.d}",
            f"graph6 {to_graph6(g)}",
            f"q {_fmt(q)}",
        ],
        0,
    )


def _cmd_enumerate(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    query = EnumerationQuery(args.m, args.beta, "at_least" if args.at_least else "exact")
    graphs = enumerate_graphs(query, guard=cfg.guard)
    return [to_graph6(g) for g in graphs], 0


def _cmd_verify(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    if args.beta == 1:
        report = verify_beta1(args.m, guard=cfg.guard, workers=cfg.workers)
    else:
        report = verify_theorem1(args.m, args.beta, guard=cfg.guard, workers=cfg.workers)
    text = emit_report(report, cfg.format, include_timings=args.timings)
    code = 0 if report.verdict == "pass" else 1
    return text.splitlines(), code


def _cmd_climb(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    start = from_graph6(args.start)
    query = EnumerationQuery(args.m, args.beta, "at_least" if args.at_least else "exact")
    trace = hill_climb(start, query, max_steps=args.max_steps)
    lines = []
    for i, st in enumerate(trace.steps, start=1):
        lines.append(
            f"step={i} move={st.move} detail=\"{st.detail}\""
            f" q_before={_fmt(st.q_before)} q_after={_fmt(st.q_after)} graph6={st.graph6}"
        )
    lines.append(f"end {to_graph6(trace.end)}")
    lines.append(f"steps {len(trace.steps)}")
    lines.append(f"converged {'true' if trace.converged_to_prediction else 'false'}")
    return lines, 0


def _cmd_rotate(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    g = from_graph6(args.graph)
    x = q_radius(g).x
    r = rotate(g, x, _parse_pair(args.remove), _parse_pair(args.add))
    return (
        [
            f"graph6 {to_graph6(r.graph)}",
            f"q_before {_fmt(r.q_before)}",
            f"q_after {_fmt(r.q_after)}",
            f"delta {_fmt(r.delta)}",
        ],
        0,
    )


def _cmd_swap(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    g = from_graph6(args.graph)
    r = kelmans_swap(g, _parse_pair(args.first), _parse_pair(args.second))
    return (
        [
            f"graph6 {to_graph6(r.graph)}",
            f"q_before {_fmt(r.q_before)}",
            f"q_after {_fmt(r.q_after)}",
            f"delta {_fmt(r.delta)}",
            f"predicted {_fmt(r.predicted_gain)}",
            f"condition_held {'true' if r.condition_held else 'false'}",
        ],
        0,
    )


def _cmd_collapse(args: argparse.Namespace, cfg: CliConfig) -> tuple[list[str], int]:
    g = from_graph6(args.graph)
    r = pendant_collapse(g, args.center, _parse_edge_list(args.edges))
    return (
        [
            f"graph6 {to_graph6(r.graph)}",
            f"q_before {_fmt(r.q_before)}",
            f"q_after {_fmt(r.q_after)}",
            f"delta {_fmt(r.delta)}",
        ],
        0,
    )


_HANDLERS = {
    "q": _cmd_q,
    "beta": _cmd_beta,
    "extremal": _cmd_extremal,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "climb": _cmd_climb,
    "rotate": _cmd_rotate,
    "swap": _cmd_swap,
    "collapse": _cmd_collapse,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspex",
        description="Signless-Laplacian spectral extremality under edge and matching constraints",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")

    p = sub.add_parser("q", parents=[common],
                       help="spectral radius, principal eigenvector, residual")
    p.add_argument("graphs", nargs="+", metavar="GRAPH6",
                   help="graph6 strings, or - for one per stdin line")
    p.add_argument("--tolerance", type=float, default=None,
                   help=f"residual tolerance (default {RESIDUAL_TOL})")

    p = sub.add_parser("beta", parents=[common], help="matching number")
    p.add_argument("graphs", nargs="+", metavar="GRAPH6",
                   help="graph6 strings, or - for one per stdin line")

    p = sub.add_parser("extremal", parents=[common],
                       help="predicted extremal graph for a class")
    p.add_argument("--m", type=int, required=True, help="edge count")
    p.add_argument("--beta", type=int, required=True, help="matching number")

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream the class members as graph6")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--at-least", action="store_true", dest="at_least",
                   help="matching number >= beta instead of == beta")
    p.add_argument("--guard", type=int, default=None,
                   help=f"enumeration guard (default {DEFAULT_GUARD}, env QSPEX_GUARD)")

    p = sub.add_parser("verify", parents=[common],
                       help="brute-force the class and compare with the prediction")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in the report")

    p = sub.add_parser("climb", parents=[common],
                       help="steepest-ascent rewiring inside a class")
    p.add_argument("--start", required=True, metavar="GRAPH6")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--at-least", action="store_true", dest="at_least")
    p.add_argument("--max-steps", type=int, default=64)

    p = sub.add_parser("rotate", parents=[common],
                       help="remove one edge, add a higher-sum edge")
    p.add_argument("graph", metavar="GRAPH6")
    p.add_argument("--remove", required=True, metavar="U,V")
    p.add_argument("--add", required=True, metavar="U,V")

    p = sub.add_parser("swap", parents=[common],
                       help="swap the partners of two independent edges")
    p.add_argument("graph", metavar="GRAPH6")
    p.add_argument("--first", required=True, metavar="U,V", help="oriented u_i,v_i")
    p.add_argument("--second", required=True, metavar="U,V", help="oriented u_j,v_j")

    p = sub.add_parser("collapse", parents=[common],
                       help="replace chosen edges by pendants at a vertex")
    p.add_argument("graph", metavar="GRAPH6")
    p.add_argument("--center", type=int, required=True, metavar="V")
    p.add_argument("--edges", required=True, metavar="U,V;U,V",
                   help="semicolon-separated edges to collapse")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        lines, code = _HANDLERS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = "\n".join(lines) + ("\n" if lines else "")
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
