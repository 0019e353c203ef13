"""Compare the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from totcoal import _backend
from totcoal.coalition import c_number, tc_number
from totcoal.corpus import CampaignConfig, run_campaign
from totcoal.domination import domatic, gamma_t, total_domatic
from totcoal.graph import from_edge_list, generate


def _random_graphs(count: int, n: int, seed: int = 1):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = from_edge_list(n, edges)
        if not g.has_isolated():
            out.append(g)
    return out


def workloads():
    rand9 = _random_graphs(20, 9)
    return {
        "tc C_12": lambda: tc_number(generate("cycle", 12)),
        "tc P_12": lambda: tc_number(generate("path", 12)),
        "c C_10": lambda: c_number(generate("cycle", 10)),
        "tc 20 random n=9": lambda: [tc_number(g, shortcuts=False) for g in rand9],
        "gamma_t C_18": lambda: gamma_t(generate("cycle", 18)),
        "domatic K_{4,4}": lambda: domatic(generate("complete_bipartite", 4, 4)),
        "total domatic 20 random n=9": lambda: [total_domatic(g) for g in rand9],
        "campaign n<=5": lambda: run_campaign(CampaignConfig(n_max=5)),
    }


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    names = _backend.available()
    if "cython" not in names:
        print("compiled extension not built; only the python backend is available")
    saved = _backend.kernels
    results: dict[str, dict[str, float]] = {}
    try:
        for backend in names:
            _backend.kernels = _backend.load(backend)
            for label, fn in workloads().items():
                results.setdefault(label, {})[backend] = best_of(fn, args.repeat)
    finally:
        _backend.kernels = saved

    header = f"{'workload':<30}" + "".join(f"{b:>12}" for b in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, row in results.items():
        line = f"{label:<30}" + "".join(f"{row[b]:>11.4f}s" for b in names)
        if len(names) == 2:
            line += f"{row['python'] / max(row['cython'], 1e-9):>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
