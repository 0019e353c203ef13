"""Command-line entry point: ``totcoal <command> [input] [options]``.

Exit status: 0 success, 1 domain error (isolated vertex, invalid partition,
failed campaign check, unreadable input), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import bounds_report
from .coalition import (
    DEFAULT_BUDGET,
    TC,
    build_tc_from_min_degree_vertex,
    build_tc_from_total_domatic,
    c_number,
    coalition_graph,
    max_coalitions_per_part,
    normalize_kind,
    parse_partition,
    tc_number,
    validate_partition,
)
from .corpus import ALL_CHECKS, PAPER_CHECKS, CampaignConfig, run_campaign, write_report
from .domination import domatic, gamma, gamma_t, total_domatic
from .errors import TotcoalError
from .graph import FAMILIES, generate, parse_edge_list
from .graph6 import parse_graph6, read_graph6_file

GRAPH_COMMANDS = (
    "tc", "c", "gamma", "gamma-t", "domatic", "total-domatic",
    "validate", "build-thm1", "build-thm29", "cgraph", "bounds",
)


class UsageError(Exception):
    pass


def _color(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edge-list", metavar="PATH", help="edge-list text file ('n m' header)")
    src.add_argument("--graph6", metavar="STRING_OR_PATH", help="graph6 record or file")
    src.add_argument(
        "--family", nargs="+", metavar=("NAME", "PARAMS"),
        help=f"generated graph: {', '.join(FAMILIES)} followed by integer parameters",
    )
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="machine-readable output")
    out.add_argument("--dot", action="store_true", help="Graphviz output (cgraph only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totcoal",
        description="Exact total coalition / coalition numbers and domination invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "tc": "exact total coalition number TC(G)",
        "c": "exact coalition number C(G)",
        "gamma": "minimum dominating set",
        "gamma-t": "minimum total dominating set",
        "domatic": "maximum domatic partition",
        "total-domatic": "maximum total domatic partition",
        "validate": "check a partition against the c- or tc-partition rule",
        "build-thm1": "tc-partition from a maximum total domatic partition",
        "build-thm29": "tc-partition from a minimum-degree (or given) vertex",
        "cgraph": "coalition graph of a partition",
        "bounds": "all lower/upper bounds on TC(G)",
    }
    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        _add_input(p)
        if name in ("tc", "c", "bounds"):
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                           help="max search nodes visited (default %(default)s)")
        if name in ("tc", "c"):
            p.add_argument("--workers", type=int, default=1)
        if name in ("validate", "cgraph"):
            p.add_argument("--partition", required=True, help='e.g. "0,1|2,3"')
            p.add_argument("--kind", default="tc", choices=["tc", "c"])
        if name == "build-thm29":
            p.add_argument("--vertex", type=int, default=None)
        if name == "bounds":
            p.add_argument("--no-exact", action="store_true", help="skip exact TC/C")

    p = sub.add_parser("campaign", help="verify the bounds over a graph corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n-max", type=int, help="all labelled graphs on 1..N vertices")
    src.add_argument("--graph6-file", metavar="PATH")
    p.add_argument("--checks", default="paper",
                   help="comma list, 'paper' (default) or 'all'; "
                        f"known: {', '.join(ALL_CHECKS)}")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    return parser


def load_graph(args):
    if args.edge_list is not None:
        return parse_edge_list(Path(args.edge_list).read_text())
    if args.graph6 is not None:
        path = Path(args.graph6)
        if path.is_file():
            graphs = read_graph6_file(path)
            if len(graphs) != 1:
                raise UsageError(f"{path} holds {len(graphs)} graphs; expected exactly one")
            return graphs[0]
        return parse_graph6(args.graph6)
    name, *params = args.family
    try:
        values = [int(x) for x in params]
    except ValueError:
        raise UsageError(f"family parameters must be integers: {params}") from None
    return generate(name, *values)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _fmt_parts(parts) -> str:
    return " | ".join("{" + ",".join(map(str, p)) + "}" for p in parts)


def _run_graph_command(args) -> int:
    if args.dot and args.command != "cgraph":
        raise UsageError("--dot is only available for cgraph")
    g = load_graph(args)
    cmd = args.command

    if cmd in ("tc", "c"):
        solve = tc_number if cmd == "tc" else c_number
        cert = solve(g, args.budget, workers=args.workers)
        label = "TC" if cmd == "tc" else "C"
        if cert.witness is not None:
            witness = cert.witness.canonical()
            payload = {"value": cert.value, "exhausted": cert.exhausted,
                       "witness": witness.to_json()}
            body = _fmt_parts(witness.parts)
        else:
            payload = cert.to_json()
            body = "(none)"
        suffix = "" if cert.exhausted else "  [lower bound (budget exhausted)]"
        _emit(args, payload, f"{label} = {cert.value}{suffix}\nwitness: {body}")
        return 0

    if cmd in ("gamma", "gamma-t"):
        cert = gamma(g) if cmd == "gamma" else gamma_t(g)
        sym = "gamma" if cmd == "gamma" else "gamma_t"
        _emit(args, cert.to_json(), f"{sym} = {cert.value}\nset: {cert.set}")
        return 0

    if cmd in ("domatic", "total-domatic"):
        cert = domatic(g) if cmd == "domatic" else total_domatic(g)
        sym = "d" if cmd == "domatic" else "d_t"
        _emit(args, cert.to_json(), f"{sym} = {cert.order}\nparts: {_fmt_parts(cert.parts)}")
        return 0

    if cmd == "validate":
        partition = parse_partition(g, args.partition)
        verdict = validate_partition(g, partition, args.kind)
        lines = [_color("valid", "32") if verdict.valid else _color("invalid", "31")]
        for i, p in enumerate(verdict.per_part, 1):
            partners = ",".join(f"V{j + 1}" for j in p.partners) or "-"
            lines.append(f"  V{i} {p.members}: {p.status}; partners {partners}")
        _emit(args, verdict.to_json(), "\n".join(lines))
        return 0 if verdict.valid else 1

    if cmd in ("build-thm1", "build-thm29"):
        if cmd == "build-thm1":
            events: list = []
            partition = build_tc_from_total_domatic(g, events)
        else:
            events = []
            partition = build_tc_from_min_degree_vertex(g, args.vertex)
        verdict = validate_partition(g, partition, TC)
        payload = {
            "order": partition.order,
            "valid": verdict.valid,
            "partition": partition.to_json(),
            "gap_events": [f"{e.stage}: {e.detail}" for e in events],
        }
        state = _color("valid", "32") if verdict.valid else _color("invalid", "31")
        text = f"order {partition.order} ({state})\npartition: {_fmt_parts(partition.parts)}"
        for e in events:
            text += f"\ngap event at {e.stage}: {e.detail}"
        _emit(args, payload, text)
        return 0 if verdict.valid else 1

    if cmd == "cgraph":
        partition = parse_partition(g, args.partition)
        cg = coalition_graph(g, partition, normalize_kind(args.kind))
        if args.dot:
            print(cg.to_dot(), end="")
            return 0
        payload = cg.to_json()
        payload["max_coalitions_per_part"] = max_coalitions_per_part(cg)
        edges = ", ".join(f"V{i + 1}-V{j + 1}" for i, j in cg.derived.edges()) or "(none)"
        text = (f"{cg.derived.n} parts, {cg.derived.num_edges()} coalition edges: {edges}\n"
                f"max coalitions per part: {payload['max_coalitions_per_part']}")
        _emit(args, payload, text)
        return 0

    if cmd == "bounds":
        report = bounds_report(g, compute_exact=not args.no_exact, budget=args.budget)
        _emit(args, report.to_json(), report.format_table())
        return 0

    raise UsageError(f"unknown command {cmd}")


def _parse_checks(spec: str) -> tuple[str, ...]:
    if spec == "paper":
        return PAPER_CHECKS
    if spec == "all":
        return ALL_CHECKS
    return tuple(c.strip() for c in spec.split(",") if c.strip())


def _run_campaign(args) -> int:
    try:
        cfg = CampaignConfig(
            n_max=args.n_max,
            graph6_path=args.graph6_file,
            checks=_parse_checks(args.checks),
            budget=args.budget,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_campaign(cfg)
    if args.report:
        write_report(report, args.report)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        text = report.summary()
        text = text.replace("result: PASS", "result: " + _color("PASS", "32"))
        text = text.replace("result: FAIL", "result: " + _color("FAIL", "31"))
        print(text, end="")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "campaign":
            return _run_campaign(args)
        return _run_graph_command(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"totcoal: error: {exc}", file=sys.stderr)
        return 2
    except (TotcoalError, OSError) as exc:
        print(f"totcoal: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
