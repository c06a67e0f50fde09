"""Command-line front end.

Exit codes: 0 perfect / success, 1 not perfect / verification failure,
2 usage or input error, 3 recognizer disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .enumeration import ENUMERATION_MAX_ORDER, verify_theorem
from .exact_solvers import covering_number, domination_number
from .graph_core import Graph, GraphError, graph_from_edges, induced_subgraph, parse_graph6, write_graph6
from .perfection import (
    ORACLE_MAX_ORDER,
    Certificate,
    PreconditionError,
    RecognizerDisagreement,
    classify_forbidden,
    classify_structural,
    find_violating_induced_subgraph,
    is_perfect_oracle,
)

EXIT_PERFECT = 0
EXIT_NOT_PERFECT = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3

GAMMA_MAX_ORDER = 40
BETA_MAX_ORDER = 62


class InputError(Exception):
    pass


@dataclass(frozen=True)
class InputGraphSpec:
    """Where a graph comes from and how it is encoded.

    ``source`` is ``"-"`` for standard input, an existing file path, or the
    record itself given inline. ``fmt`` is ``graph6``, ``edges`` or ``auto``
    (a leading digit means edge list; graph6 bytes are never digits).
    """

    source: str = "-"
    fmt: str = "auto"

    def read_text(self) -> str:
        if self.source == "-":
            return sys.stdin.read()
        if os.path.isfile(self.source):
            with open(self.source, encoding="ascii") as fh:
                return fh.read()
        return self.source

    def load(self) -> Graph:
        text = self.read_text().strip()
        if not text:
            raise InputError("empty input")
        fmt = self.fmt
        if fmt == "auto":
            fmt = "edges" if text[0].isdigit() else "graph6"
        try:
            if fmt == "graph6":
                return parse_graph6(text)
            return parse_edge_list(text)
        except GraphError as exc:
            raise InputError(str(exc)) from exc


def parse_edge_list(text: str) -> Graph:
    """``n m`` followed by ``m`` pairs ``u v`` (0-based); any whitespace separates."""
    try:
        nums = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise InputError(f"edge list must contain only integers ({exc})") from None
    if len(nums) < 2:
        raise InputError("edge list needs a header line 'n m'")
    n, m = nums[0], nums[1]
    body = nums[2:]
    if m < 0 or len(body) != 2 * m:
        raise InputError(f"header promises {m} edges but {len(body) / 2:g} pairs follow")
    return graph_from_edges(n, zip(body[0::2], body[1::2]))


def _fmt_set(vs: Sequence[int]) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _require_classifiable(g: Graph) -> None:
    if g.order < 2:
        raise InputError(f"classification needs a non-trivial graph (order >= 2), got order {g.order}")


# --- commands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    g = InputGraphSpec(args.input, args.format).load()
    _require_classifiable(g)
    certs: dict[str, Optional[Certificate]] = {}
    disagreement = None
    for name, fn in (("structural", classify_structural), ("forbidden", classify_forbidden)):
        try:
            certs[name] = fn(g)
        except RecognizerDisagreement as exc:
            certs[name] = None
            disagreement = exc
    if g.order <= ORACLE_MAX_ORDER:
        try:
            certs["oracle"] = is_perfect_oracle(g)
        except RecognizerDisagreement as exc:
            certs["oracle"] = None
            disagreement = exc
    verdicts = {name: c.verdict.value for name, c in certs.items() if c is not None}
    agree = disagreement is None and len(set(verdicts.values())) == 1

    primary = certs["structural"] or certs["forbidden"]
    lines = [str(primary) if primary else "disagreement"]
    for name, cert in certs.items():
        lines.append(f"  {name}: {cert if cert is not None else 'error'}")
    if not agree:
        lines.append(f"DISAGREE {write_graph6(g)} " + " ".join(f"{k}={v}" for k, v in verdicts.items()))
        if disagreement is not None:
            lines.append(f"  {disagreement}")
    payload = {
        "graph6": write_graph6(g) if g.order <= 62 else None,
        "order": g.order,
        "verdict": primary.verdict.value if primary else None,
        "certificate": primary.to_dict() if primary else None,
        "recognizers": {k: (c.to_dict() if c else None) for k, c in certs.items()},
        "agree": agree,
    }
    _emit(args, payload, "\n".join(lines))
    if not agree:
        return EXIT_DISAGREE
    return EXIT_PERFECT if primary.perfect else EXIT_NOT_PERFECT


def _solver_cmd(args: argparse.Namespace, name: str, solver, cap: int) -> int:
    g = InputGraphSpec(args.input, args.format).load()
    if g.order < 1:
        raise InputError(f"{name} needs at least one vertex")
    if g.order > cap:
        raise InputError(f"order {g.order} is above what the exact {name} solver handles (max {cap})")
    result = solver(g)
    _emit(
        args,
        {"quantity": name, "value": result.value, "witness": list(result.witness)},
        f"{name} {result.value} {_fmt_set(result.witness)}",
    )
    return 0


def cmd_gamma(args: argparse.Namespace) -> int:
    return _solver_cmd(args, "gamma", domination_number, GAMMA_MAX_ORDER)


def cmd_beta(args: argparse.Namespace) -> int:
    return _solver_cmd(args, "beta", covering_number, BETA_MAX_ORDER)


def cmd_witness(args: argparse.Namespace) -> int:
    g = InputGraphSpec(args.input, args.format).load()
    _require_classifiable(g)
    found = find_violating_induced_subgraph(g)
    if found is None:
        _emit(args, {"violating": None}, "none")
        return 0
    h, _ = induced_subgraph(g, found)
    gamma = domination_number(h).value
    beta = covering_number(h).value
    _emit(
        args,
        {"violating": list(found), "gamma": gamma, "beta": beta},
        f"{_fmt_set(found)} gamma={gamma} beta={beta}",
    )
    return 1


def cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.max_n <= ENUMERATION_MAX_ORDER:
        raise InputError(f"--max-n must be in 2..{ENUMERATION_MAX_ORDER}")
    if args.oracle_max_n is not None and not 1 <= args.oracle_max_n <= args.max_n:
        raise InputError("--oracle-max-n must be between 1 and --max-n")
    if args.sample is not None and args.sample < 1:
        raise InputError("--sample must be positive")
    if args.seed is not None and args.sample is None:
        raise InputError("--seed only applies together with --sample")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    report = verify_theorem(
        args.max_n, args.oracle_max_n, sample=args.sample, seed=args.seed or 0, jobs=args.jobs
    )
    text = json.dumps(report.to_dict(), sort_keys=True) + "\n" if args.json else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        print(f"RESULT {'OK' if report.ok else 'FAIL'}")
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edges", "auto"), default=argparse.SUPPRESS,
                        help="input encoding (default: auto)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="domperf",
        description="Domination/covering numbers and gamma-beta-perfect graph recognition.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, func, help_text: str) -> None:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", nargs="?", default="-",
                       help="file path, inline graph6/edge-list text, or '-' for stdin (default)")
        p.set_defaults(func=func)

    graph_command("classify", cmd_classify, "decide gamma-beta-perfection with certificates")
    graph_command("gamma", cmd_gamma, "exact domination number and a minimum dominating set")
    graph_command("beta", cmd_beta, "exact covering number and a minimum vertex cover")
    graph_command("witness", cmd_witness, "smallest connected induced subgraph with gamma < beta")

    v = sub.add_parser("verify", parents=[common], help="check all recognizers agree on small graphs")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--oracle-max-n", type=int, default=None,
                   help="largest order checked exhaustively by the definitional oracle (default: min(max-n, 6))")
    v.add_argument("--sample", type=int, default=None,
                   help="oracle-check this many random connected graphs at each order above --oracle-max-n")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "auto")
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (InputError, PreconditionError, GraphError) as exc:
        print(f"domperf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
