"""graph6 encoding and decoding.

Only the one-byte size form (n <= 62) is written.  The four-byte form is
accepted on input as long as the graph fits the 64-vertex cap.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph

HEADER = b">>graph6<<"
_BIAS = 63


def _triangle(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> bytes:
    if g.n > 62:
        raise Graph6Error(f"graph6 long size form unsupported (n={g.n} > 62)")
    out = bytearray([g.n + _BIAS])
    acc = nbits = 0
    for i, j in _triangle(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + _BIAS)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _BIAS)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode a single graph6 record (optionally prefixed by the header)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 record", base)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside printable graph6 range 63..126", base + pos)

    if data[0] != 126:
        n, pos = data[0] - _BIAS, 1
    elif len(data) >= 2 and data[1] == 126:
        raise Graph6Error("eight-byte size form exceeds the 64-vertex cap", base)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated four-byte size prefix", base)
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - _BIAS)
        if n <= 62:
            raise Graph6Error(f"non-canonical four-byte size prefix for n={n}", base)
        pos = 4
    if n == 0:
        raise Graph6Error("graphs with zero vertices are not supported", base)
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex cap", base)

    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != want:
        raise Graph6Error(
            f"expected {want} edge bytes for n={n}, found {len(body)}", base + pos
        )
    adj = [0] * n
    k = 0
    for i, j in _triangle(n):
        byte = body[k // 6] - _BIAS
        if byte >> (5 - k % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    pad = want * 6 - nbits
    if pad and (body[-1] - _BIAS) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + want - 1)
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> list[Graph]:
    """Read one record per line; blank lines are skipped."""
    graphs = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
    return graphs


def write_graph6_file(path: str | Path, graphs, header: bool = False) -> None:
    with open(path, "wb") as fh:
        for idx, g in enumerate(graphs):
            if header and idx == 0:
                fh.write(HEADER)
            fh.write(encode_graph6(g) + b"\n")
