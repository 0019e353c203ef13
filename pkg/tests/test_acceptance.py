"""End-to-end acceptance criteria.

Each test prints exactly one PASS/FAIL line (also collected in the pytest
terminal summary) and then asserts the criterion at its stated tolerance.
"""

from __future__ import annotations

import random
import time
from pathlib import Path

import networkx as nx
import pytest

from totcoal.coalition import TC, default_workers, tc_number, validate_partition
from totcoal.corpus import ALL_CHECKS, CampaignConfig, run_campaign
from totcoal.graph import generate
from totcoal.graph6 import encode_graph6, parse_graph6, read_graph6_file

from .conftest import random_graph, record_criterion
from .oracles import tc_oracle
from .test_graph6 import same_as_nx

FIXTURE = Path(__file__).parent / "fixtures" / "connected6.g6"


@pytest.fixture(scope="module")
def sweep6():
    """All labelled graphs on n <= 6 under every campaign check."""
    return run_campaign(CampaignConfig(n_max=6, checks=ALL_CHECKS))


def _failures(report, *names):
    return {name: report.checks[name].failed for name in names}


def test_criterion_1_cycles():
    start = time.perf_counter()
    got = {n: tc_number(generate("cycle", n)).value for n in range(3, 13)}
    elapsed = time.perf_counter() - start
    expected = {n: 4 if n % 4 == 0 else 3 for n in range(3, 13)}
    wrong = {n: got[n] for n in got if got[n] != expected[n]}
    ok = not wrong and elapsed <= 300
    record_criterion(1, ok, f"TC(C_n), 3<=n<=12, mismatches={wrong}, {elapsed:.1f}s")
    assert ok


def test_criterion_2_paths():
    start = time.perf_counter()
    got = {n: tc_number(generate("path", n)).value for n in range(3, 13)}
    elapsed = time.perf_counter() - start
    wrong = {n: v for n, v in got.items() if v != 3}
    ok = not wrong and elapsed <= 300
    record_criterion(2, ok, f"TC(P_n)=3, 3<=n<=12, mismatches={wrong}, {elapsed:.1f}s")
    assert ok, f"TC(P_n) differs from 3 at {wrong}"


def test_criterion_3_sharpness_anchors():
    slow, wrong = [], []
    for n in range(2, 9):
        start = time.perf_counter()
        value = tc_number(generate("complete", n)).value
        if time.perf_counter() - start >= 1.0:
            slow.append(n)
        if value != n:
            wrong.append(f"K_{n}")
    for r in range(1, 8):
        for s in range(r, 9 - r):
            if tc_number(generate("complete_bipartite", r, s)).value != r + s:
                wrong.append(f"K_{{{r},{s}}}")
    if tc_number(generate("path", 2)).value != 2:
        wrong.append("K_2")
    ok = not slow and not wrong
    record_criterion(3, ok, f"K_n / K_r,s anchors, wrong={wrong}, slow={slow}")
    assert ok


def test_criterion_4_full_vertex(sweep6):
    tally = sweep6.checks["full_vertex"]
    ok = tally.failed == 0 and tally.applicable > 0
    record_criterion(4, ok, f"full-vertex graphs n<=6: {tally.applicable} checked, "
                            f"{tally.failed} failed")
    assert ok


def test_criterion_5_exhaustive_sweep(sweep6):
    names = ("cor_range", "thm26i", "zelinka", "thm29", "two_dt", "delta_cap")
    failed = _failures(sweep6, *names)
    flagged = sweep6.checks["two_dt"].flagged
    ok = (
        not any(failed.values())
        and not sweep6.budget_exhausted
        and sweep6.seconds <= 1800
    )
    record_criterion(5, ok, f"n<=6 sweep over {sweep6.graphs} graphs, failures={failed}, "
                            f"two_dt flagged={flagged}, {sweep6.seconds:.1f}s")
    assert ok


def test_criterion_6_complement_bounds(sweep6):
    failed = _failures(sweep6, "thm26ii", "thm26iii")
    applicable = sweep6.checks["thm26iii"].applicable
    ok = not any(failed.values()) and applicable > 0
    record_criterion(6, ok, f"C >= gamma_t(co-G) and sum bound, failures={failed}")
    assert ok


def test_criterion_7_builders(sweep6):
    failed = _failures(sweep6, "build_thm1", "build_thm29")
    gaps = [ce for ce in sweep6.checks["build_thm1"].counterexamples
            if "gap_events" in ce["values"]]
    ok = not any(failed.values())
    record_criterion(7, ok, f"builders on n<=6, failures={failed}, gap events={len(gaps)}")
    assert ok


def test_criterion_8_oracle_cross_check(small_graphs):
    mismatches = []
    checked = 0
    for g in small_graphs:
        if g.has_isolated():
            continue
        checked += 1
        fast = tc_number(g, shortcuts=False).value
        if fast != tc_oracle(g):
            mismatches.append(encode_graph6(g).decode())
    ok = not mismatches and checked > 0
    record_criterion(8, ok, f"pruned solver vs oracle on {checked} graphs n<=5, "
                            f"mismatches={mismatches[:5]}")
    assert ok


def test_criterion_9_graph6_round_trip():
    rng = random.Random(2024)
    bad = 0
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        code = encode_graph6(g)
        if parse_graph6(code) != g or encode_graph6(parse_graph6(code)) != code:
            bad += 1
    lines = [ln for ln in FIXTURE.read_bytes().splitlines() if ln.strip()]
    ours = read_graph6_file(FIXTURE)
    parity = len(ours) == len(lines) and all(
        same_as_nx(g, nx.from_graph6_bytes(ln.replace(b">>graph6<<", b"")))
        for ln, g in zip(lines, ours)
    )
    ok = bad == 0 and parity
    record_criterion(9, ok, f"graph6 round trip 1000 graphs: {bad} bad; "
                            f"fixture parity ({len(ours)} graphs): {parity}")
    assert ok


def test_criterion_10_determinism():
    rng = random.Random(10)
    sample = []
    while len(sample) < 100:
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.8))
        if not g.has_isolated():
            sample.append(g)
    workers = default_workers()
    diffs = 0
    for g in sample:
        one = tc_number(g, workers=1, shortcuts=False)
        many = tc_number(g, workers=workers, shortcuts=False)
        assert validate_partition(g, one.witness, TC).valid
        if (one.value, one.witness.canonical()) != (many.value, many.witness.canonical()):
            diffs += 1
    ok = diffs == 0
    record_criterion(10, ok, f"1 vs {workers} workers on 100 graphs: {diffs} differ")
    assert ok
