import pytest

from totcoal.bounds import (
    INAPPLICABLE,
    bounds_report,
    check_sum_bound,
    closed_form_tc,
    detect_family,
    family_name,
    zelinka_floor,
)
from totcoal.coalition import tc_number
from totcoal.errors import IsolatedVertexError
from totcoal.graph import from_edge_list, generate


def test_complete_report():
    r = bounds_report(generate("complete", 5))
    assert r.d_t == 2
    assert r.lower_bounds["two_dt"] == 4
    assert r.lower_bounds["gamma_complement"] == 5
    assert r.lower_bounds["delta_plus_1"] is INAPPLICABLE
    assert r.lower_bounds["zelinka2"] == 4
    assert r.exact_tc == 5
    assert r.sharp_flags["gamma_complement"] and r.sharp_flags["upper"]
    assert not r.sharp_flags["two_dt"]
    assert r.family == "K_5" and r.closed_form == 5
    assert r.sum_bound is INAPPLICABLE


def test_cycle_and_path_closed_forms():
    assert bounds_report(generate("cycle", 8), compute_exact=False).closed_form == 4
    r = bounds_report(generate("path", 6))
    assert r.family == "P_6"
    assert r.closed_form == 3
    assert r.lower_bounds["delta_plus_1"] == 2
    assert r.exact_tc == 3


def test_report_json_and_table():
    r = bounds_report(generate("complete_bipartite", 2, 3))
    js = r.to_json()
    assert js["family"] == "K_{2,3}"
    assert js["exact_tc"] == 5
    assert js["lower_bounds"]["trivial"] == 2
    table = r.format_table()
    assert "exact TC" in table and "upper: n" in table


def test_no_exact_skips_solver():
    r = bounds_report(generate("cycle", 6), compute_exact=False)
    assert r.exact_tc is None and r.sharp_flags == {} and r.sum_bound is None


def test_isolated_rejected():
    with pytest.raises(IsolatedVertexError):
        bounds_report(from_edge_list(3, [(0, 1)]))


def test_sum_bound():
    assert check_sum_bound(generate("cycle", 5)) is True
    assert check_sum_bound(generate("cycle", 6)) is True
    assert check_sum_bound(generate("complete", 4)) is INAPPLICABLE
    assert check_sum_bound(from_edge_list(3, [(0, 1)])) is INAPPLICABLE


@pytest.mark.parametrize(
    "g, expected",
    [
        (generate("complete", 4), ("complete", (4,))),
        (generate("complete_bipartite", 2, 3), ("complete_bipartite", (2, 3))),
        (generate("star", 4), ("complete_bipartite", (1, 4))),
        (generate("cycle", 7), ("cycle", (7,))),
        (generate("path", 5), ("path", (5,))),
        (generate("path", 2), ("complete", (2,))),
        (from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]), None),
        (from_edge_list(4, [(0, 1), (1, 2), (1, 3)]), ("complete_bipartite", (1, 3))),
        (from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]), None),
    ],
)
def test_detect_family(g, expected):
    assert detect_family(g) == expected


def test_family_names():
    assert family_name("complete_bipartite", (1, 3)) == "K_{1,3}"
    assert family_name("cycle", (8,)) == "C_8"
    assert closed_form_tc("cycle", (12,)) == 4
    assert closed_form_tc("cycle", (10,)) == 3
    assert closed_form_tc("path", (2,)) == 2


def test_zelinka_floor():
    assert zelinka_floor(6, 5) == 3
    assert zelinka_floor(6, 1) == 1
    assert zelinka_floor(8, 2) == 1


def test_lower_bounds_never_exceed_exact(small_graphs):
    for g in small_graphs:
        if g.n > 4 or g.has_isolated():
            continue
        r = bounds_report(g)
        assert r.exact_tc == tc_number(g).value
        for name, value in r.applicable_lower().items():
            if name != "two_dt":
                assert value <= r.exact_tc, (name, g)
