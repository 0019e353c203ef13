import random
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given

from totcoal.errors import Graph6Error
from totcoal.graph import from_edge_list, generate
from totcoal.graph6 import encode_graph6, parse_graph6, read_graph6_file, write_graph6_file

from .conftest import random_graph
from .test_graph import graphs

FIXTURE = Path(__file__).parent / "fixtures" / "connected6.g6"


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def same_as_nx(g, h) -> bool:
    return g.n == h.number_of_nodes() and {tuple(sorted(e)) for e in h.edges()} == set(g.edges())


def test_single_vertex():
    # n=1 is the single byte 63+1
    assert parse_graph6(bytes([64])) == from_edge_list(1, [])
    assert same_as_nx(parse_graph6(b"@"), nx.from_graph6_bytes(b"@"))


def test_k5_from_reference_encoder():
    data = nx.to_graph6_bytes(nx.complete_graph(5), header=False).strip()
    assert parse_graph6(data) == generate("complete", 5)


def test_p4_matches_reference_encoder():
    ref = nx.to_graph6_bytes(nx.path_graph(4), header=False).strip()
    assert encode_graph6(generate("path", 4)) == ref


def test_round_trip_examples():
    for g in (generate("cycle", 4), generate("complete", 2)):
        assert parse_graph6(encode_graph6(g)) == g
    empty = from_edge_list(3, [])
    assert encode_graph6(empty) == bytes([3 + 63, 63])


def test_header_accepted():
    assert parse_graph6(b">>graph6<<Bw") == generate("complete", 3)


@given(graphs(max_n=20))
def test_round_trip_property(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_fixture_parity_with_reference_decoder():
    lines = [ln for ln in FIXTURE.read_bytes().splitlines() if ln.strip()]
    ours = read_graph6_file(FIXTURE)
    assert len(ours) == len(lines) == 112
    for line, g in zip(lines, ours):
        ref = nx.from_graph6_bytes(line.replace(b">>graph6<<", b""))
        assert same_as_nx(g, ref)


def test_random_parity_with_reference_encoder():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 30), rng.random())
        assert encode_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_four_byte_size_form_decodes():
    h = nx.cycle_graph(63)
    g = parse_graph6(nx.to_graph6_bytes(h, header=False).strip())
    assert same_as_nx(g, h)


def test_encode_rejects_long_form():
    with pytest.raises(Graph6Error, match="unsupported"):
        encode_graph6(generate("path", 63))


@pytest.mark.parametrize(
    "data, offset",
    [
        (b"C~~", 1),        # too few edge bytes for n=4
        (b"Bx", 1),         # n=3 has 3 bits; padding bits set
        (b"C\x20", 1),      # byte below printable range
        (b"", 0),
        (b"~??", 0),        # truncated 4-byte size prefix
        (b"~~??????", 0),   # 8-byte form
    ],
)
def test_parse_errors_report_offset(data, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(data)
    assert info.value.offset == offset


def test_file_round_trip(tmp_path):
    rng = random.Random(3)
    gs = [random_graph(rng, rng.randint(1, 12)) for _ in range(20)]
    path = tmp_path / "g.g6"
    write_graph6_file(path, gs, header=True)
    assert read_graph6_file(path) == gs
