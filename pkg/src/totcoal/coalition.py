"""Coalition and total coalition partitions.

Covers the pairwise predicates, partition validation, the exact solvers for
C(G) and TC(G), two constructive tc-partition builders, and coalition graphs.
"""

from __future__ import annotations

import atexit
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from . import _backend
from .domination import (
    SetLike,
    require_no_isolated,
    shrink_to_minimal_tds,
    total_domatic,
)
from .errors import ContractError, PreconditionError, StructuralPartitionError, TotcoalError
from .graph import Graph, VertexSet, as_mask, bits, popcount

log = logging.getLogger(__name__)

TC = "tc_partition"
C = "c_partition"
_KIND_ALIASES = {"tc": TC, TC: TC, "c": C, C: C}

DEFAULT_BUDGET = 10**8
PREFIX_DEPTH = 6

SINGLETON_DOMINATING = "singleton_dominating"
NON_DOMINATING_WITH_PARTNER = "non_dominating_with_partner"
NON_TDS_WITH_PARTNER = "non_tds_with_partner"
INVALID = "invalid"


class InternalConsistencyError(TotcoalError):
    """A construction step the theory guarantees did not go through."""


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind]
    except KeyError:
        raise ValueError(f"unknown partition kind {kind!r} (use 'tc' or 'c')") from None


def _table(g: Graph, kind: str) -> tuple[int, ...]:
    return g.adj if kind == TC else g.closed()


def _reach(mask: int, table: Sequence[int]) -> int:
    acc = 0
    for v in bits(mask):
        acc |= table[v]
    return acc


# --------------------------------------------------------------- partitions


@dataclass(frozen=True)
class Partition:
    graph: Graph
    parts: tuple[VertexSet, ...]

    @classmethod
    def of(cls, g: Graph, parts: Iterable[SetLike]) -> Partition:
        return cls(g, tuple(VertexSet(as_mask(p)) for p in parts))

    @property
    def order(self) -> int:
        return len(self.parts)

    def check_structure(self) -> None:
        seen = 0
        for idx, part in enumerate(self.parts):
            if not part:
                raise StructuralPartitionError(f"part {idx} is empty")
            if part.mask & ~self.graph.full_mask:
                raise StructuralPartitionError(
                    f"part {idx} contains a vertex outside 0..{self.graph.n - 1}"
                )
            if part.mask & seen:
                dup = VertexSet(part.mask & seen)
                raise StructuralPartitionError(f"part {idx} overlaps earlier parts on {dup}")
            seen |= part.mask
        if seen != self.graph.full_mask:
            missing = VertexSet(self.graph.full_mask & ~seen)
            raise StructuralPartitionError(f"vertices {missing} are not covered")

    def canonical(self) -> Partition:
        """Parts sorted by smallest member."""
        return Partition(self.graph, tuple(sorted(self.parts, key=VertexSet.min)))

    def to_json(self) -> list[list[int]]:
        return [p.to_list() for p in self.parts]

    def __str__(self) -> str:
        return " | ".join(",".join(map(str, p)) for p in self.parts)


def parse_partition(g: Graph, text: str) -> Partition:
    """Parse ``"0,1|2,3"``: parts split by '|', vertices by ','."""
    parts = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        try:
            parts.append([int(tok) for tok in chunk.split(",") if tok.strip()])
        except ValueError:
            raise StructuralPartitionError(f"bad vertex in part {chunk!r}") from None
    return Partition.of(g, parts)


def _from_assignment(g: Graph, assign: Sequence[int], k: int) -> Partition:
    masks = [0] * k
    for v, b in enumerate(assign):
        masks[b] |= 1 << v
    return Partition(g, tuple(VertexSet(m) for m in masks))


# --------------------------------------------------------------- predicates


def _check_pair(a: int, b: int) -> None:
    if not a or not b:
        raise ContractError("coalition candidates must be nonempty")
    if a & b:
        raise ContractError(f"coalition candidates overlap on {VertexSet(a & b)}")


def _forms(table, full: int, a: int, b: int) -> bool:
    ra = _reach(a, table)
    rb = _reach(b, table)
    return ra != full and rb != full and ra | rb == full


def forms_total_coalition(g: Graph, a: SetLike, b: SetLike) -> bool:
    """Neither set is total dominating but their union is."""
    a, b = as_mask(a), as_mask(b)
    _check_pair(a, b)
    return _forms(g.adj, g.full_mask, a, b)


def forms_coalition(g: Graph, a: SetLike, b: SetLike) -> bool:
    """Neither set is dominating but their union is."""
    a, b = as_mask(a), as_mask(b)
    _check_pair(a, b)
    return _forms(g.closed(), g.full_mask, a, b)


@dataclass(frozen=True)
class PartVerdict:
    members: VertexSet
    status: str
    partners: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.status != INVALID


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    kind: str
    per_part: tuple[PartVerdict, ...]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "kind": self.kind,
            "parts": [
                {"members": p.members.to_list(), "status": p.status, "partners": list(p.partners)}
                for p in self.per_part
            ],
        }


def validate_partition(g: Graph, partition: Partition, kind: str = TC) -> PartitionVerdict:
    """Check every part against the c- or tc-partition rule.

    Structural problems (overlap, empty part, uncovered vertex) raise
    :class:`StructuralPartitionError` instead of producing a verdict.
    """
    kind = normalize_kind(kind)
    if partition.graph != g:
        partition = Partition(g, partition.parts)
    partition.check_structure()
    table = _table(g, kind)
    full = g.full_mask
    reach = [_reach(p.mask, table) for p in partition.parts]
    k = len(reach)
    verdicts = []
    for i, part in enumerate(partition.parts):
        partners = tuple(
            j for j in range(k)
            if j != i and reach[i] != full and reach[j] != full and reach[i] | reach[j] == full
        )
        if reach[i] == full:
            status = SINGLETON_DOMINATING if kind == C and len(part) == 1 else INVALID
        elif partners:
            status = NON_TDS_WITH_PARTNER if kind == TC else NON_DOMINATING_WITH_PARTNER
        else:
            status = INVALID
        verdicts.append(PartVerdict(part, status, partners))
    return PartitionVerdict(all(v.ok for v in verdicts), kind, tuple(verdicts))


# ------------------------------------------------------------------ solvers


@dataclass(frozen=True)
class CoalitionCertificate:
    kind: str
    value: int
    witness: Partition | None
    exhausted: bool
    nodes: int = field(default=0, compare=False)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exhausted": self.exhausted,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


_pools: dict[int, ProcessPoolExecutor] = {}


def _pool(workers: int) -> ProcessPoolExecutor:
    if workers not in _pools:
        _pools[workers] = ProcessPoolExecutor(max_workers=workers)
    return _pools[workers]


@atexit.register
def _shutdown_pools() -> None:
    for pool in _pools.values():
        pool.shutdown(wait=False, cancel_futures=True)
    _pools.clear()


def _prefixes(depth: int, k: int) -> list[tuple[int, ...]]:
    """Restricted-growth prefixes of the given length, lexicographic."""
    out = []
    for combo in product(range(min(depth, k)), repeat=depth):
        top = -1
        for b in combo:
            if b > top + 1:
                break
            top = max(top, b)
        else:
            out.append(combo)
    return out


def _run_prefix(backend: str, table, n: int, k: int, min_dom: int, prefix, budget: int):
    return _backend.load(backend).coalition_search(table, n, k, min_dom, prefix, budget)


def _search_k(table, n: int, k: int, min_dom: int, budget: int, workers: int):
    kernels = _backend.kernels
    if workers <= 1 or n <= PREFIX_DEPTH:
        return kernels.coalition_search(table, n, k, min_dom, (), budget)
    backend = "cython" if kernels is not _backend._pykernels else "python"
    prefixes = _prefixes(PREFIX_DEPTH, k)
    futures = [
        _pool(workers).submit(_run_prefix, backend, table, n, k, min_dom, p, budget)
        for p in prefixes
    ]
    nodes = 0
    complete = True
    try:
        for fut in futures:
            assign, used, done = fut.result()
            nodes += used
            complete = complete and done
            if assign is not None:
                # earlier prefixes all finished empty, so this is the
                # canonically smallest witness
                return (assign if complete else None), nodes, complete
            if not complete:
                return None, nodes, False
    finally:
        for fut in futures:
            fut.cancel()
    return None, nodes, True


def _exact(g: Graph, kind: str, budget: int, workers: int):
    table = _table(g, kind)
    min_dom = 1 if kind == TC else 2
    total = 0
    for k in range(g.n, 0, -1):
        remaining = -1 if budget < 0 else max(budget - total, 0)
        assign, nodes, complete = _search_k(table, g.n, k, min_dom, remaining, workers)
        total += nodes
        if assign is not None:
            return k, _from_assignment(g, assign, k), total
        if not complete:
            return None, None, total
    return None, None, total


def tc_number(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    *,
    workers: int = 1,
    shortcuts: bool = True,
) -> CoalitionCertificate:
    """Exact total coalition number with its canonical witness.

    Orders are tried from ``n`` downward; the witness is the first valid
    partition in restricted-growth order.  ``budget`` caps the number of
    search nodes visited; when it runs out the best constructive
    partition is returned with ``exhausted=False``.
    """
    require_no_isolated(g)
    if shortcuts and g.has_full_vertex():
        witness = Partition(g, tuple(VertexSet(1 << v) for v in range(g.n)))
        return CoalitionCertificate(TC, g.n, witness, True)
    k, witness, nodes = _exact(g, TC, budget, workers)
    if witness is not None:
        return CoalitionCertificate(TC, k, witness, True, nodes)
    candidates = [build_tc_from_total_domatic(g)]
    if not g.has_full_vertex():
        candidates.append(build_tc_from_min_degree_vertex(g))
    valid = [p for p in candidates if validate_partition(g, p, TC).valid]
    best = max(valid, key=lambda p: p.order).canonical()
    log.warning("tc_number budget exhausted after %d search nodes; lower bound %d", nodes, best.order)
    return CoalitionCertificate(TC, best.order, best, False, nodes)


def c_number(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    *,
    workers: int = 1,
) -> CoalitionCertificate:
    """Exact coalition number, same search skeleton as :func:`tc_number`.

    On budget exhaustion no constructive witness is available, so the result
    is the trivial lower bound 1 with ``witness=None``.
    """
    k, witness, nodes = _exact(g, C, budget, workers)
    if witness is not None:
        return CoalitionCertificate(C, k, witness, True, nodes)
    log.warning("c_number budget exhausted after %d search nodes", nodes)
    return CoalitionCertificate(C, 1, None, False, nodes)


# ----------------------------------------------------------------- builders


@dataclass(frozen=True)
class ProofGapEvent:
    """Something the construction's correctness argument did not anticipate."""

    stage: str
    detail: str


def split_total_coalition(g: Graph, m: int) -> tuple[int, int]:
    """First nonempty proper submask ``a`` of ``m`` (ascending) such that
    ``a`` and ``m - a`` form a total coalition."""
    sub = (0 - m) & m
    while sub != m:
        if _forms(g.adj, g.full_mask, sub, m & ~sub):
            return sub, m & ~sub
        sub = (sub - m) & m
    raise InternalConsistencyError(f"no total coalition split of {VertexSet(m)}")


def build_tc_from_total_domatic(g: Graph, events: list | None = None) -> Partition:
    """tc-partition built from a maximum total domatic partition.

    Parts ``1..k-1`` are shrunk to minimal total dominating sets (surplus
    moves to the last part) and halved.  The last part is halved if minimal;
    otherwise its minimal core is halved and the leftover ``W`` is either
    kept as its own part (when it has a partner) or merged into the second
    half of the core.  The result is re-validated; failures are appended to
    ``events`` rather than raised.
    """
    require_no_isolated(g)
    full = g.full_mask
    domatic = total_domatic(g)
    masks = [p.mask for p in domatic.parts]
    last = masks[-1]
    built: list[int] = []
    for m in masks[:-1]:
        core = shrink_to_minimal_tds(g, VertexSet(m)).mask
        last |= m & ~core
        built.extend(split_total_coalition(g, core))

    core = shrink_to_minimal_tds(g, VertexSet(last)).mask
    a, b = split_total_coalition(g, core)
    built += [a, b]
    leftover = last & ~core
    if leftover:
        if _reach(leftover, g.adj) == full:
            _note(events, "leftover", f"W={VertexSet(leftover)} is total dominating")
        if any(_forms(g.adj, full, leftover, x) for x in built):
            built.append(leftover)
        else:
            built[-1] = b | leftover

    partition = Partition(g, tuple(VertexSet(x) for x in built))
    verdict = validate_partition(g, partition, TC)
    if not verdict.valid:
        bad = [i for i, p in enumerate(verdict.per_part) if not p.ok]
        _note(events, "validate", f"parts {bad} of {partition} fail the tc rule")
    return partition


def _note(events: list | None, stage: str, detail: str) -> None:
    log.warning("construction gap at %s: %s", stage, detail)
    if events is not None:
        events.append(ProofGapEvent(stage, detail))


def build_tc_from_min_degree_vertex(g: Graph, v: int | None = None) -> Partition:
    """Singletons for each neighbour of ``v`` plus ``(V - N[v]) + v``.

    ``v`` defaults to the lowest-index vertex of minimum degree.
    """
    require_no_isolated(g)
    full_vertices = g.full_vertices()
    if full_vertices:
        raise PreconditionError(f"vertex {full_vertices[0]} is a full vertex")
    if v is None:
        degrees = [popcount(nb) for nb in g.adj]
        v = degrees.index(min(degrees))
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    nb = g.adj[v]
    rest = (g.full_mask & ~(nb | 1 << v)) | 1 << v
    parts = [VertexSet(1 << u) for u in bits(nb)] + [VertexSet(rest)]
    return Partition(g, tuple(parts))


# ---------------------------------------------------------- coalition graph


@dataclass(frozen=True)
class CoalitionGraph:
    base: Partition
    kind: str
    derived: Graph

    def to_dot(self) -> str:
        lines = ["graph CG {"]
        for i, part in enumerate(self.base.parts, 1):
            members = "{" + ",".join(map(str, part)) + "}"
            lines.append(f'  V{i} [label="V{i}", tooltip="{members}"];')
        for i, j in self.derived.edges():
            lines.append(f"  V{i + 1} -- V{j + 1};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "parts": self.base.to_json(),
            "edges": [list(e) for e in self.derived.edges()],
        }


def coalition_graph(g: Graph, partition: Partition, kind: str = TC) -> CoalitionGraph:
    kind = normalize_kind(kind)
    if partition.graph != g:
        partition = Partition(g, partition.parts)
    partition.check_structure()
    table = _table(g, kind)
    masks = [p.mask for p in partition.parts]
    adj = [0] * len(masks)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if _forms(table, g.full_mask, masks[i], masks[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CoalitionGraph(partition, kind, Graph(len(masks), tuple(adj)))


def max_coalitions_per_part(cg: CoalitionGraph) -> int:
    return max(popcount(nb) for nb in cg.derived.adj)


def default_workers() -> int:
    return max(2, os.cpu_count() or 1)
