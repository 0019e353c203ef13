"""Domination predicates and exact γ, γ_t, d and d_t with certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .errors import IsolatedVertexError
from .graph import Graph, VertexSet, as_mask, bits

DOMINATING = "dominating"
TOTAL_DOMINATING = "total_dominating"
DOMATIC = "domatic"
TOTAL_DOMATIC = "total_domatic"

SetLike = VertexSet | Iterable[int]


def reach_of(mask: int, table: tuple[int, ...]) -> int:
    acc = 0
    for v in bits(mask):
        acc |= table[v]
    return acc


def is_dominating(g: Graph, s: SetLike) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s``."""
    return reach_of(as_mask(s), g.closed()) == g.full_mask


def is_total_dominating(g: Graph, s: SetLike) -> bool:
    """True iff every vertex, members included, has a neighbour in ``s``."""
    return reach_of(as_mask(s), g.adj) == g.full_mask


def require_no_isolated(g: Graph) -> None:
    for v, nb in enumerate(g.adj):
        if not nb:
            raise IsolatedVertexError(v)


@dataclass(frozen=True)
class DominationCertificate:
    kind: str
    set: VertexSet
    minimum: bool
    value: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value, "set": self.set.to_list()}


@dataclass(frozen=True)
class DomaticCertificate:
    kind: str
    parts: tuple[VertexSet, ...]
    order: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "parts": [p.to_list() for p in self.parts],
        }


def _minimum(g: Graph, table: tuple[int, ...], kind: str) -> DominationCertificate:
    mask = _backend.kernels.min_cover(table, g.n)
    assert mask >= 0, "a covering set always exists here"
    s = VertexSet(mask)
    return DominationCertificate(kind, s, True, len(s))


def gamma(g: Graph) -> DominationCertificate:
    """Minimum dominating set (smallest size, then smallest bitmask)."""
    return _minimum(g, g.closed(), DOMINATING)


def gamma_t(g: Graph) -> DominationCertificate:
    require_no_isolated(g)
    return _minimum(g, g.adj, TOTAL_DOMINATING)


def is_minimal_total_dominating(g: Graph, s: SetLike) -> bool:
    mask = as_mask(s)
    if reach_of(mask, g.adj) != g.full_mask:
        return False
    return all(reach_of(mask & ~(1 << v), g.adj) != g.full_mask for v in bits(mask))


def shrink_to_minimal_tds(g: Graph, s: SetLike) -> VertexSet:
    """Drop vertices one at a time until the set is a minimal TDS.

    Candidates are tried from the highest index down and the scan restarts
    after every successful removal, so low-index vertices are kept.
    """
    mask = as_mask(s)
    full = g.full_mask
    if reach_of(mask, g.adj) != full:
        raise ValueError(f"{VertexSet(mask)} is not a total dominating set")
    removed = True
    while removed:
        removed = False
        for v in sorted(bits(mask), reverse=True):
            trial = mask & ~(1 << v)
            if reach_of(trial, g.adj) == full:
                mask = trial
                removed = True
                break
    return VertexSet(mask)


def _parts_from_assignment(assign: list[int], k: int) -> tuple[VertexSet, ...]:
    masks = [0] * k
    for v, b in enumerate(assign):
        masks[b] |= 1 << v
    return tuple(VertexSet(m) for m in masks)


def _max_cover_partition(g: Graph, table, upper: int, kind: str) -> DomaticCertificate:
    for k in range(upper, 0, -1):
        assign = _backend.kernels.cover_partition(table, g.n, k)
        if assign is not None:
            return DomaticCertificate(kind, _parts_from_assignment(assign, k), k)
    raise AssertionError("the whole vertex set is always a valid single part")


def domatic(g: Graph) -> DomaticCertificate:
    upper = min(g.n // gamma(g).value, min(g.degree(v) for v in range(g.n)) + 1)
    return _max_cover_partition(g, g.closed(), upper, DOMATIC)


def total_domatic(g: Graph) -> DomaticCertificate:
    require_no_isolated(g)
    upper = min(g.n // gamma_t(g).value, min(g.degree(v) for v in range(g.n)))
    return _max_cover_partition(g, g.adj, upper, TOTAL_DOMATIC)
