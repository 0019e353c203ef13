"""Lower/upper bounds on TC(G) collected into one report."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .coalition import DEFAULT_BUDGET, c_number, tc_number
from .domination import gamma, gamma_t, require_no_isolated, total_domatic
from .graph import Graph, bits, complement, degree_profile, is_clique, popcount


class Inapplicable(enum.Enum):
    INAPPLICABLE = "inapplicable"

    def __repr__(self) -> str:
        return "INAPPLICABLE"


INAPPLICABLE = Inapplicable.INAPPLICABLE


# ---------------------------------------------------------- family detection


def _connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def _components(g: Graph) -> list[int]:
    left = g.full_mask
    comps = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        left &= ~seen
    return comps


def detect_family(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Recognise K_n, K_{r,s}, C_n or P_n (n >= 2) structurally."""
    n = g.n
    degrees = sorted(popcount(nb) for nb in g.adj)
    m = sum(degrees) // 2
    if n >= 2 and m == n * (n - 1) // 2:
        return "complete", (n,)
    comps = _components(complement(g))
    if len(comps) == 2 and all(is_clique(complement(g), c) for c in comps):
        r, s = sorted(popcount(c) for c in comps)
        if m == r * s:
            return "complete_bipartite", (r, s)
    if not _connected(g):
        return None
    if n >= 3 and all(d == 2 for d in degrees):
        return "cycle", (n,)
    if n >= 2 and degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:]):
        return "path", (n,)
    return None


def family_name(family: str, params: tuple[int, ...]) -> str:
    if family == "complete_bipartite":
        return f"K_{{{params[0]},{params[1]}}}"
    letter = {"complete": "K", "cycle": "C", "path": "P"}[family]
    return f"{letter}_{params[0]}"


def closed_form_tc(family: str, params: tuple[int, ...]) -> int | None:
    if family == "complete":
        return params[0]
    if family == "complete_bipartite":
        return params[0] + params[1]
    if family == "cycle":
        return 4 if params[0] % 4 == 0 else 3
    if family == "path":
        return 3 if params[0] >= 3 else 2
    return None


# ------------------------------------------------------------------ report


def zelinka_floor(n: int, delta: int) -> int:
    return n // (n - delta + 1)


@dataclass
class BoundsReport:
    n: int
    delta: int
    Delta: int
    gamma_c: int
    gamma_t_c: int | Inapplicable
    d_t: int
    lower_bounds: dict[str, int | Inapplicable]
    upper_bound: int
    exact_tc: int | None = None
    exact_c: int | None = None
    family: str | None = None
    closed_form: int | None = None
    sum_bound: bool | Inapplicable | None = None
    sharp_flags: dict[str, bool] = field(default_factory=dict)

    def applicable_lower(self) -> dict[str, int]:
        return {k: v for k, v in self.lower_bounds.items() if not isinstance(v, Inapplicable)}

    def to_json(self) -> dict:
        def enc(x):
            return x.value if isinstance(x, Inapplicable) else x

        return {
            "n": self.n,
            "delta": self.delta,
            "Delta": self.Delta,
            "gamma_complement": self.gamma_c,
            "gamma_t_complement": enc(self.gamma_t_c),
            "d_t": self.d_t,
            "lower_bounds": {k: enc(v) for k, v in self.lower_bounds.items()},
            "upper_bound": self.upper_bound,
            "exact_tc": self.exact_tc,
            "exact_c": self.exact_c,
            "family": self.family,
            "closed_form": self.closed_form,
            "sum_bound": enc(self.sum_bound),
            "sharp_flags": self.sharp_flags,
        }

    def format_table(self) -> str:
        rows = [
            ("n", self.n),
            ("min degree", self.delta),
            ("max degree", self.Delta),
            ("d_t(G)", self.d_t),
            ("gamma(complement)", self.gamma_c),
            ("gamma_t(complement)", _txt(self.gamma_t_c)),
        ]
        for name, value in self.lower_bounds.items():
            flag = " (sharp)" if self.sharp_flags.get(name) else ""
            rows.append((f"lower: {name}", f"{_txt(value)}{flag}"))
        flag = " (sharp)" if self.sharp_flags.get("upper") else ""
        rows.append(("upper: n", f"{self.upper_bound}{flag}"))
        if self.family:
            rows.append(("family", self.family))
        if self.closed_form is not None:
            rows.append(("closed form TC", self.closed_form))
        if self.exact_tc is not None:
            rows.append(("exact TC", self.exact_tc))
        if self.exact_c is not None:
            rows.append(("exact C", self.exact_c))
        if self.sum_bound is not None:
            rows.append(("TC+C >= gamma+gamma_t (complement)", _txt(self.sum_bound)))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows) + "\n"


def _txt(x) -> str:
    return x.value if isinstance(x, Inapplicable) else str(x)


def bounds_report(
    g: Graph, compute_exact: bool = True, budget: int = DEFAULT_BUDGET
) -> BoundsReport:
    require_no_isolated(g)
    prof = degree_profile(g)
    comp = complement(g)
    has_full = bool(prof.full_vertices)
    gamma_c = gamma(comp).value
    gamma_t_c = INAPPLICABLE if comp.has_isolated() else gamma_t(comp).value
    d_t = total_domatic(g).order
    lower: dict[str, int | Inapplicable] = {
        "trivial": 2,
        "two_dt": 2 * d_t,
        "zelinka2": 2 * zelinka_floor(g.n, prof.min_degree),
        "delta_plus_1": INAPPLICABLE if has_full else prof.min_degree + 1,
        "gamma_complement": gamma_c,
    }
    report = BoundsReport(
        n=g.n,
        delta=prof.min_degree,
        Delta=prof.max_degree,
        gamma_c=gamma_c,
        gamma_t_c=gamma_t_c,
        d_t=d_t,
        lower_bounds=lower,
        upper_bound=g.n,
    )
    fam = detect_family(g)
    if fam is not None:
        report.family = family_name(*fam)
        report.closed_form = closed_form_tc(*fam)
    if compute_exact:
        tc = tc_number(g, budget)
        c = c_number(g, budget)
        if tc.exhausted:
            report.exact_tc = tc.value
        if c.exhausted:
            report.exact_c = c.value
        if report.exact_tc is not None:
            report.sharp_flags = {
                name: value == report.exact_tc for name, value in report.applicable_lower().items()
            }
            report.sharp_flags["upper"] = report.exact_tc == g.n
        if has_full or isinstance(gamma_t_c, Inapplicable):
            report.sum_bound = INAPPLICABLE
        elif report.exact_tc is not None and report.exact_c is not None:
            report.sum_bound = report.exact_tc + report.exact_c >= gamma_c + gamma_t_c
    return report


def check_sum_bound(g: Graph, budget: int = DEFAULT_BUDGET) -> bool | Inapplicable:
    """TC(G) + C(G) >= γ(Ḡ) + γ_t(Ḡ), or INAPPLICABLE off its hypotheses."""
    if g.has_isolated() or g.has_full_vertex():
        return INAPPLICABLE
    comp = complement(g)
    lhs = tc_number(g, budget).value + c_number(g, budget).value
    return lhs >= gamma(comp).value + gamma_t(comp).value
