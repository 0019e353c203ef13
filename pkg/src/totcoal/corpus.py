"""Bound-verification campaigns over graph corpora.

A campaign walks every graph of a source (all labelled graphs up to some
order, or a graph6 file), evaluates the selected checks on each, and
aggregates pass/fail counts with captured counterexamples.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator

from .bounds import closed_form_tc, detect_family, family_name, zelinka_floor
from .coalition import (
    DEFAULT_BUDGET,
    TC,
    build_tc_from_min_degree_vertex,
    build_tc_from_total_domatic,
    c_number,
    coalition_graph,
    max_coalitions_per_part,
    tc_number,
    validate_partition,
)
from .domination import gamma, gamma_t, total_domatic
from .errors import TotcoalError
from .graph import Graph, complement, degree_profile
from .graph6 import encode_graph6, parse_graph6, read_graph6_file

PAPER_CHECKS = (
    "cor_range",
    "two_dt",
    "full_vertex",
    "lemma_families",
    "thm26i",
    "thm26ii",
    "thm26iii",
    "zelinka",
    "thm29",
    "simplicial",
    "delta_cap",
)
BUILDER_CHECKS = ("build_thm1", "build_thm29")
ALL_CHECKS = PAPER_CHECKS + BUILDER_CHECKS

# violations of these are findings about an unproved claim, not failures
FLAG_ONLY = frozenset({"two_dt"})

MAX_EXHAUSTIVE_N = 7
MAX_COUNTEREXAMPLES = 10

PASS, FAIL, NA = "pass", "fail", "inapplicable"


class BudgetExhausted(TotcoalError):
    pass


class _Facts:
    """Lazily computed invariants of one graph."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.gap_events: list = []

    @cached_property
    def prof(self):
        return degree_profile(self.g)

    @property
    def isolated(self) -> bool:
        return self.prof.has_isolated

    @property
    def has_full(self) -> bool:
        return bool(self.prof.full_vertices)

    @cached_property
    def comp(self) -> Graph:
        return complement(self.g)

    @cached_property
    def tc_cert(self):
        cert = tc_number(self.g, self.budget, shortcuts=False)
        if not cert.exhausted:
            raise BudgetExhausted("TC")
        return cert

    @property
    def tc(self) -> int:
        return self.tc_cert.value

    @cached_property
    def c(self) -> int:
        cert = c_number(self.g, self.budget)
        if not cert.exhausted:
            raise BudgetExhausted("C")
        return cert.value

    @cached_property
    def d_t(self) -> int:
        return total_domatic(self.g).order

    @cached_property
    def gamma_c(self) -> int:
        return gamma(self.comp).value

    @cached_property
    def gamma_t_c(self) -> int:
        return gamma_t(self.comp).value


def _check(name: str, f: _Facts) -> tuple[str, dict]:
    g = f.g
    n = g.n
    if name == "cor_range":
        if f.isolated:
            return NA, {}
        return (PASS if 2 <= f.tc <= n else FAIL), {"n": n, "tc": f.tc}
    if name == "two_dt":
        if f.isolated:
            return NA, {}
        return (PASS if f.tc >= 2 * f.d_t else FAIL), {"tc": f.tc, "d_t": f.d_t}
    if name == "full_vertex":
        if f.isolated or not f.has_full:
            return NA, {}
        return (PASS if f.tc == n else FAIL), {"n": n, "tc": f.tc}
    if name == "lemma_families":
        fam = detect_family(g) if not f.isolated else None
        if fam is None:
            return NA, {}
        expected = closed_form_tc(*fam)
        values = {"family": family_name(*fam), "closed_form": expected, "tc": f.tc}
        return (PASS if f.tc == expected else FAIL), values
    if name == "thm26i":
        if f.isolated:
            return NA, {}
        return (PASS if f.tc >= f.gamma_c else FAIL), {"tc": f.tc, "gamma_c": f.gamma_c}
    if name == "thm26ii":
        if f.has_full:
            return NA, {}
        return (PASS if f.c >= f.gamma_t_c else FAIL), {"c": f.c, "gamma_t_c": f.gamma_t_c}
    if name == "thm26iii":
        if f.isolated or f.has_full:
            return NA, {}
        values = {"tc": f.tc, "c": f.c, "gamma_c": f.gamma_c, "gamma_t_c": f.gamma_t_c}
        ok = f.tc + f.c >= f.gamma_c + f.gamma_t_c
        return (PASS if ok else FAIL), values
    if name == "zelinka":
        if f.isolated:
            return NA, {}
        floor = zelinka_floor(n, f.prof.min_degree)
        values = {"floor": floor, "d_t": f.d_t, "tc": f.tc}
        return (PASS if f.d_t >= floor and f.tc >= 2 * floor else FAIL), values
    if name == "thm29":
        if f.isolated or f.has_full:
            return NA, {}
        delta = f.prof.min_degree
        return (PASS if f.tc >= delta + 1 else FAIL), {"tc": f.tc, "delta": delta}
    if name == "simplicial":
        if f.isolated or f.has_full or not f.prof.simplicial_vertices:
            return NA, {}
        best = max(f.prof.simplicial_vertices, key=lambda v: f.prof.degrees[v])
        bound = f.prof.degrees[best] + 1
        values = {"tc": f.tc, "vertex": best, "bound": bound}
        return (PASS if f.tc >= bound else FAIL), values
    if name == "delta_cap":
        if f.isolated:
            return NA, {}
        cg = coalition_graph(g, f.tc_cert.witness, TC)
        cap = max_coalitions_per_part(cg)
        values = {"max_coalitions": cap, "Delta": f.prof.max_degree}
        return (PASS if cap <= f.prof.max_degree + 1 else FAIL), values
    if name == "build_thm1":
        if f.isolated:
            return NA, {}
        events: list = []
        part = build_tc_from_total_domatic(g, events)
        valid = validate_partition(g, part, TC).valid
        values = {"order": part.order, "d_t": f.d_t, "valid": valid, "witness": str(part)}
        if events:
            values["gap_events"] = [f"{e.stage}: {e.detail}" for e in events]
        ok = valid and part.order >= f.d_t + 1 and not events
        return (PASS if ok else FAIL), values
    if name == "build_thm29":
        if f.isolated or f.has_full:
            return NA, {}
        part = build_tc_from_min_degree_vertex(g)
        valid = validate_partition(g, part, TC).valid
        delta = f.prof.min_degree
        values = {"order": part.order, "delta": delta, "valid": valid, "witness": str(part)}
        return (PASS if valid and part.order == delta + 1 else FAIL), values
    raise ValueError(f"unknown check {name!r}")


def run_single_check(g: Graph, name: str, budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    """Evaluate one named check on one graph: (status, offending values)."""
    return _check(name, _Facts(g, budget))


def simplicial_construction_valid(g: Graph) -> list[int]:
    """Simplicial vertices whose singleton+remainder construction is *not*
    a tc-partition (informational; the inequality is checked separately)."""
    prof = degree_profile(g)
    if prof.has_isolated or prof.full_vertices:
        return []
    bad = []
    for v in prof.simplicial_vertices:
        part = build_tc_from_min_degree_vertex(g, v)
        if not validate_partition(g, part, TC).valid:
            bad.append(v)
    return bad


def _evaluate(item: tuple[tuple[int, ...], tuple[str, ...], int]):
    adj, checks, budget = item
    g = Graph(len(adj), adj)
    facts = _Facts(g, budget)
    out = {}
    try:
        for name in checks:
            out[name] = _check(name, facts)
    except BudgetExhausted:
        return None
    notes = []
    if "simplicial" in checks:
        bad = simplicial_construction_valid(g)
        if bad:
            notes.append({"note": "simplicial_construction_invalid", "vertices": bad})
    return out, notes


# ------------------------------------------------------------------ driver


@dataclass(frozen=True)
class CampaignConfig:
    n_max: int | None = None
    graph6_path: str | None = None
    checks: tuple[str, ...] = PAPER_CHECKS
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def __post_init__(self):
        if (self.n_max is None) == (self.graph6_path is None):
            raise ValueError("give exactly one of n_max or graph6_path")
        if self.n_max is not None and not 1 <= self.n_max <= MAX_EXHAUSTIVE_N:
            raise ValueError(f"exhaustive n_max must be in 1..{MAX_EXHAUSTIVE_N}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")


@dataclass
class CheckTally:
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    flagged: int = 0
    inapplicable: int = 0
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "passed": self.passed,
            "failed": self.failed,
            "flagged": self.flagged,
            "inapplicable": self.inapplicable,
            "counterexamples": self.counterexamples,
        }


@dataclass
class CampaignReport:
    source: str
    graphs: int
    checks: dict[str, CheckTally]
    budget_exhausted: list[str] = field(default_factory=list)
    notes: list = field(default_factory=list)
    note_count: int = 0
    seconds: float = 0.0

    @property
    def failed(self) -> int:
        return sum(t.failed for t in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "source": self.source,
            "graphs": self.graphs,
            "checks": {k: v.to_json() for k, v in self.checks.items()},
            "budget_exhausted": self.budget_exhausted,
            "notes": self.notes,
            "note_count": self.note_count,
            "failed": self.failed,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def summary(self) -> str:
        lines = [f"source: {self.source}   graphs: {self.graphs}"]
        head = f"{'check':<16}{'applicable':>11}{'passed':>9}{'failed':>8}{'flagged':>9}"
        lines.append(head)
        for name, t in self.checks.items():
            lines.append(
                f"{name:<16}{t.applicable:>11}{t.passed:>9}{t.failed:>8}{t.flagged:>9}"
            )
        if self.budget_exhausted:
            lines.append(f"budget exhausted on {len(self.budget_exhausted)} graph(s)")
        if self.note_count:
            lines.append(f"notes: {self.note_count} (see JSON report)")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}   ({self.seconds:.1f}s)")
        return "\n".join(lines) + "\n"


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs on n vertices, by edge-bit code."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if code >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def _source_graphs(cfg: CampaignConfig) -> Iterator[Graph]:
    if cfg.n_max is not None:
        for n in range(1, cfg.n_max + 1):
            yield from labeled_graphs(n)
    else:
        yield from read_graph6_file(cfg.graph6_path)


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    start = time.perf_counter()
    source = (
        f"exhaustive_labeled(n_max={cfg.n_max})"
        if cfg.n_max is not None
        else f"graph6_file({Path(cfg.graph6_path).name})"
    )
    report = CampaignReport(source, 0, {name: CheckTally() for name in cfg.checks})
    graphs = list(_source_graphs(cfg))
    items = [(g.adj, tuple(cfg.checks), cfg.budget) for g in graphs]
    if cfg.workers > 1:
        with Pool(cfg.workers) as pool:
            results = pool.map(_evaluate, items, chunksize=max(1, len(items) // (cfg.workers * 16)))
    else:
        results = map(_evaluate, items)

    # aggregation in corpus order keeps the report schedule-independent
    for g, res in zip(graphs, results):
        report.graphs += 1
        code = encode_graph6(g).decode("ascii")
        if res is None:
            report.budget_exhausted.append(code)
            continue
        outcomes, notes = res
        for note in notes:
            report.note_count += 1
            if len(report.notes) < MAX_COUNTEREXAMPLES:
                report.notes.append({"graph6": code, **note})
        for name, (status, values) in outcomes.items():
            tally = report.checks[name]
            if status == NA:
                tally.inapplicable += 1
                continue
            tally.applicable += 1
            if status == PASS:
                tally.passed += 1
                continue
            if name in FLAG_ONLY:
                tally.flagged += 1
            else:
                tally.failed += 1
            if len(tally.counterexamples) < MAX_COUNTEREXAMPLES:
                tally.counterexamples.append({"graph6": code, "values": values})
    report.seconds = time.perf_counter() - start
    return report


def reverify(counterexample: dict, name: str, budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    return run_single_check(parse_graph6(counterexample["graph6"]), name, budget)


def write_report(report: CampaignReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report.to_json(), indent=2) + "\n")
