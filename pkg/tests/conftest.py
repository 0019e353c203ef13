import random

import pytest

from totcoal import _backend
from totcoal.corpus import labeled_graphs


@pytest.fixture(params=_backend.available())
def backend(request, monkeypatch):
    """Run the test once per available kernel implementation."""
    monkeypatch.setattr(_backend, "kernels", _backend.load(request.param))
    return request.param


@pytest.fixture(scope="session")
def small_graphs():
    """Every labelled graph on 1..5 vertices."""
    return [g for n in range(1, 6) for g in labeled_graphs(n)]


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    from totcoal.graph import from_edge_list

    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
