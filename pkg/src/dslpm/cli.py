"""Command-line interface: ``dslpm {spectrum,threshold,check,verify,extremal}``.

Exit codes: 0 success or consistent, 1 counterexample (or failed campaign),
2 usage/input error, 3 precondition violation such as a disconnected graph.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .graph_core import (
    Bipartition,
    Graph,
    GraphError,
    ParseError,
    build_g4,
    build_g5,
    build_gamma,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    two_coloring,
)
from .spectral import DisconnectedGraphError, dsl_matrix, eigenvalues_symmetric
from .thresholds import (
    gamma_all_ones_rayleigh,
    gamma_radius,
    kappa,
    split_threshold,
    theorem1_branch,
    theorem1_threshold,
)
from .verifier import COUNTEREXAMPLE, CampaignConfig, ConfigError, check_theorem1, check_theorem2, run_campaign

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def fmt(x: float) -> str:
    """Ten significant digits, always with a decimal point."""
    s = format(x, ".10g")
    if "e" not in s and "." not in s and "inf" not in s and "nan" not in s:
        s += ".0"
    return s


def read_graph(args: argparse.Namespace) -> Graph:
    text = Path(args.file).read_text() if args.file else sys.stdin.read()
    fmt_name = args.format
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError("no graph on input")
    if fmt_name == "auto":
        fmt_name = "edgelist" if lines[0].strip().isdigit() else "graph6"
    try:
        if fmt_name == "graph6":
            if len(lines) != 1:
                raise CliError("expected exactly one graph6 line")
            return parse_graph6(lines[0])
        return parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}") from None


def emit(args: argparse.Namespace, payload: dict[str, Any], human: Sequence[str]) -> None:
    if args.output == "json":
        print(json.dumps(payload))
    elif args.output == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(_csv_cell(payload[k]) for k in keys))
    else:
        for line in human:
            print(line)


def _csv_cell(v: Any) -> str:
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v).replace(",", ";")
    return str(v)


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = read_graph(args)
    if not is_connected(g):
        raise CliError("graph is disconnected; the distance matrix is undefined", EXIT_PRECONDITION)
    q = dsl_matrix(g)
    result = eigenvalues_symmetric(q, tol=args.tol)
    payload: dict[str, Any] = {"eta1": result.radius, "spectrum": list(result.eigenvalues)}
    human = [f"eta1 = {fmt(result.radius)}",
             "spectrum = " + " ".join(fmt(x) for x in result.eigenvalues)]
    if args.matrix:
        payload["matrix"] = q.tolist()
        human.append("Q =")
        human += [" ".join(fmt(x) for x in row) for row in q.tolist()]
    emit(args, payload, human)
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    n = args.n
    if args.theorem == 1:
        if n < 4 or n % 2:
            raise CliError("theorem 1 needs an even n >= 4")
        branch = theorem1_branch(n)
        value = theorem1_threshold(n)
        payload = {"theorem": 1, "n": n, "threshold": value, "branch": branch,
                   "split_threshold": split_threshold(n)}
        human = [f"threshold = {fmt(value)} (branch: {branch})"]
    else:
        if n < 3:
            raise CliError("theorem 2 needs n >= 3")
        value = kappa(n)
        measured = gamma_radius(n)
        ones = float(gamma_all_ones_rayleigh(n))
        payload = {"theorem": 2, "n": n, "threshold": value, "branch": "kappa",
                   "extremal_eta1": measured, "extremal_all_ones_rayleigh": ones}
        human = [f"threshold = {fmt(value)} (branch: kappa)",
                 f"extremal eta1 = {fmt(measured)}"]
    emit(args, payload, human)
    return EXIT_OK


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"invalid vertex list {text!r}") from None


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args)
    if not is_connected(g):
        raise CliError("graph is disconnected", EXIT_PRECONDITION)
    if args.theorem == 1:
        if g.order < 4 or g.order % 2:
            raise CliError(f"theorem 1 needs an even order >= 4, got {g.order}")
        report = check_theorem1(g, args.tol)
    else:
        if args.bipartition == "explicit":
            if not args.left:
                raise CliError("--bipartition explicit needs --left")
            try:
                b = Bipartition.of(g, _parse_vertex_list(args.left))
            except GraphError as exc:
                raise CliError(str(exc)) from None
        else:
            b = two_coloring(g)
            if b is None:
                raise CliError("graph is not bipartite (2-colouring failed)")
        if not b.balanced or len(b.left) < 3:
            raise CliError("theorem 2 needs a balanced bipartition with side size >= 3")
        report = check_theorem2(g, b, args.tol)
    payload = report.to_dict()
    human = [f"graph = {report.graph_id}",
             f"eta1 = {fmt(report.eta1)}",
             f"threshold = {fmt(report.threshold)}",
             f"perfect matching = {'yes' if report.has_pm else 'no'}",
             f"verdict = {report.verdict}"]
    emit(args, payload, human)
    return EXIT_COUNTEREXAMPLE if report.verdict == COUNTEREXAMPLE else EXIT_OK


def load_config(path: str) -> dict[str, Any]:
    """Read a JSON or ``key = value`` config; bare names fall back to bundled configs."""
    p = Path(path)
    if not p.exists():
        bundled = resources.files("dslpm") / "configs" / path
        if not bundled.is_file():
            raise CliError(f"config file not found: {path}")
        text = bundled.read_text()
    else:
        text = p.read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(f"invalid JSON config: {exc}") from None
    return _parse_key_values(text)


def _parse_key_values(text: str) -> dict[str, Any]:
    data: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"config line {lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        node = data
        *parents, leaf = key.split(".")
        for name in parents:
            node = node.setdefault(name, {})
            if not isinstance(node, dict):
                raise CliError(f"config line {lineno}: {key} conflicts with an earlier value")
        node[leaf] = _parse_value(value)
    return data


def _parse_value(value: str) -> Any:
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        pass
    if "," in value:
        return [_parse_value(v.strip()) for v in value.split(",") if v.strip()]
    return value


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.config:
        raise CliError("--config is required")
    data = load_config(args.config)
    if args.workers is not None:
        data["workers"] = args.workers
    if args.seed is not None:
        data["seed"] = args.seed
    if args.tol is not None:
        data["tolerance"] = args.tol
    if args.csv:
        data["csv"] = args.csv
    try:
        cfg = CampaignConfig.from_mapping(data)
    except ConfigError as exc:
        raise CliError(f"config error: {exc}") from None
    summary = run_campaign(cfg)
    text = json.dumps(summary.to_dict(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    csv_path = data.get("csv")
    if csv_path:
        Path(csv_path).write_text(summary.reports_csv())
    return EXIT_OK if summary.passed else EXIT_COUNTEREXAMPLE


def cmd_extremal(args: argparse.Namespace) -> int:
    try:
        if args.family == "g4":
            if args.n is None:
                raise CliError("--family g4 needs --n")
            g = build_g4(args.n)
        elif args.family == "g5":
            if args.s is not None:
                s = args.s
            elif args.n is not None and args.n % 2 == 0:
                s = args.n // 2 - 1
            else:
                raise CliError("--family g5 needs --s or an even --n")
            g = build_g5(s)
        else:
            if args.n is None or args.s is None:
                raise CliError("--family gamma needs --n and --s")
            k = args.k if args.k is not None else args.s - 1
            g = build_gamma(args.n, args.s, k).graph
    except GraphError as exc:
        raise CliError(str(exc)) from None
    print(to_graph6(g))
    return EXIT_OK


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dslpm",
        description="Distance signless Laplacian spectra and perfect-matching thresholds.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--file", help="read the graph from FILE instead of stdin")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")

    def output(p: argparse.ArgumentParser, choices=("human", "json", "csv")) -> None:
        p.add_argument("--output", choices=choices, default="human")
        p.add_argument("--json", dest="output", action="store_const", const="json",
                       help="shorthand for --output json")

    p = sub.add_parser("spectrum", help="eta1 and the full spectrum of Q(G)")
    graph_input(p)
    output(p)
    p.add_argument("--matrix", action="store_true", help="also dump Q(G)")
    p.add_argument("--tol", type=_positive_float, default=1e-12, help="Jacobi tolerance")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("threshold", help="theta/split threshold (theorem 1) or kappa (theorem 2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", type=int, choices=(1, 2), default=1)
    output(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("check", help="classify one graph against a theorem")
    graph_input(p)
    output(p)
    p.add_argument("--theorem", type=int, choices=(1, 2), default=1)
    p.add_argument("--bipartition", choices=("auto", "explicit"), default="auto")
    p.add_argument("--left", help="side X as a comma-separated vertex list")
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--config", help="JSON or key=value file, or a bundled name such as desk.json")
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=_positive_float)
    p.add_argument("--csv", help="write per-graph reports as CSV to this path")
    p.add_argument("--out", help="write the JSON summary here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extremal", help="emit an extremal graph as graph6")
    p.add_argument("--family", choices=("g4", "g5", "gamma"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_extremal)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"dslpm: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedGraphError as exc:
        print(f"dslpm: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, ValueError) as exc:
        print(f"dslpm: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
