"""Simple undirected graphs stored as per-vertex neighbour bitmasks.

Vertices are the integers ``0..n-1``.  Bit ``u`` of ``adj[v]`` is set iff
``uv`` is an edge.  Vertex sets are plain bitmasks underneath; the
:class:`VertexSet` wrapper exists for the public API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import GraphError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, order=True)
class VertexSet:
    """Immutable set of vertices backed by a bitmask."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        m = 0
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex {v}")
            m |= 1 << v
        return cls(m)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def isdisjoint(self, other: VertexSet) -> bool:
        return not self.mask & other.mask

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min() of empty VertexSet")
        return (self.mask & -self.mask).bit_length() - 1

    def to_list(self) -> list[int]:
        return list(bits(self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def as_mask(s: VertexSet | Iterable[int]) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    return VertexSet.of(s).mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = self.full_mask
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric on edge ({v},{u})")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.full_mask)

    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhood masks N[v]."""
        return tuple(nb | 1 << v for v, nb in enumerate(self.adj))

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v] | 1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v, nb in enumerate(self.adj) if not nb]

    def has_isolated(self) -> bool:
        return any(nb == 0 for nb in self.adj)

    def full_vertices(self) -> list[int]:
        full = self.full_mask
        return [v for v, nb in enumerate(self.adj) if nb | 1 << v == full]

    def has_full_vertex(self) -> bool:
        full = self.full_mask
        return any(nb | 1 << v == full for v, nb in enumerate(self.adj))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates are merged."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) is not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_masks(adj: Iterable[int]) -> Graph:
    adj = tuple(adj)
    return Graph(len(adj), adj)


_COMMENT = re.compile(r"#.*")


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines text format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub("", raw).strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty edge list")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphError(f"line {lineno}: expected header 'n m'") from None
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star")


def generate(family: str, *params: int) -> Graph:
    """Standard labelled member of a named family.

    ``star`` with parameter ``s`` is ``K_{1,s}`` with centre 0.
    """
    def need(count: int):
        if len(params) != count:
            raise GraphError(f"{family} takes {count} parameter(s), got {len(params)}")

    if family == "path":
        need(1)
        (n,) = params
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        need(1)
        (n,) = params
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if family == "complete_bipartite":
        need(2)
        r, s = params
        if r < 1 or s < 1:
            raise GraphError("complete bipartite parts must be nonempty")
        return from_edge_list(r + s, [(u, v) for u in range(r) for v in range(r, r + s)])
    if family == "star":
        need(1)
        (s,) = params
        return generate("complete_bipartite", 1, s)
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    degrees: tuple[int, ...]
    has_isolated: bool
    full_vertices: tuple[int, ...]
    simplicial_vertices: tuple[int, ...]


def is_clique(g: Graph, mask: int) -> bool:
    return all(g.adj[v] | 1 << v | ~mask == -1 for v in bits(mask))


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(popcount(nb) for nb in g.adj)
    simplicial = tuple(v for v in range(g.n) if is_clique(g, g.adj[v] | 1 << v))
    return DegreeProfile(
        min(degrees),
        max(degrees),
        degrees,
        0 in degrees,
        tuple(g.full_vertices()),
        simplicial,
    )
