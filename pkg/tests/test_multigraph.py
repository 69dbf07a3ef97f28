import random

import pytest

from etw.errors import GraphFormatError
from etw.multigraph import (
    Multigraph,
    cut_quantities,
    graph_metrics,
    parse_graph,
    serialize_graph,
)
from helpers import mk, random_multigraph


def test_parse_doubled_pair():
    g = parse_graph("n 2\ne 0 1 2")
    assert g.n == 2 and g.edge_items() == (((0, 1), 2),)


def test_parse_triangle():
    g = parse_graph("n 3\ne 0 1 1\ne 1 2 1\ne 0 2 1")
    assert g.pairs() == ((0, 1), (0, 2), (1, 2))
    assert g.num_edge_copies() == 3


def test_parse_rejects_loop():
    with pytest.raises(GraphFormatError, match="line 2.*loop"):
        parse_graph("n 2\ne 0 0 1")


def test_parse_rejects_out_of_range():
    with pytest.raises(GraphFormatError, match="line 2.*range"):
        parse_graph("n 2\ne 0 5 1")


def test_parse_rejects_bad_multiplicity():
    with pytest.raises(GraphFormatError, match="line 3.*multiplicity"):
        parse_graph("n 2\n# fine\ne 0 1 0")


def test_parse_rejects_garbage_and_missing_header():
    with pytest.raises(GraphFormatError, match="directive"):
        parse_graph("n 2\nq 1 2")
    with pytest.raises(GraphFormatError, match="header"):
        parse_graph("e 0 1 1")
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_graph("n 2\nn 2")


def test_parse_accumulates_and_normalizes():
    g = parse_graph("# comment\nn 3\ne 2 0 1\ne 0 2 1")
    assert g.edge_items() == (((0, 2), 2),)


def test_serialize_native_bytes():
    assert serialize_graph(mk(2, [(0, 1, 2)])) == b"n 2\ne 0 1 2"
    assert serialize_graph(Multigraph(0)) == b"n 0"


def test_serialize_dot_parallel_edges():
    dot = serialize_graph(mk(2, [(0, 1, 2)]), "dot").decode()
    assert dot.count("0 -- 1;") == 2
    assert dot.startswith("graph")


def test_serialize_parse_identity_roundtrip():
    rng = random.Random(101)
    for _ in range(200):
        g = random_multigraph(rng, rng.randint(0, 8), max_mult=4)
        assert parse_graph(serialize_graph(g)) == g


def test_parse_serialize_normalizes_text():
    text = "# hello\ne-less line skipped? no\n"
    scrambled = "n 3\ne 1 0 1\ne 2 1 3"
    assert serialize_graph(parse_graph(scrambled)) == b"n 3\ne 0 1 1\ne 1 2 3"


def test_constructor_invariants():
    with pytest.raises(ValueError):
        Multigraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 3)])
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 1, 0)])
    with pytest.raises(ValueError):
        Multigraph(-1)


def test_metrics_doubled_pair():
    m = graph_metrics(mk(2, [(0, 1, 2)]))
    assert m.vdeg == (1, 1) and m.edeg == (2, 2)
    assert m.max_vdeg == 1 and m.max_edeg == 2
    assert m.diameters == (1,)


def test_metrics_theta5():
    m = graph_metrics(mk(2, [(0, 1, 5)]))
    assert m.max_vdeg == 1 and m.max_edeg == 5


def test_metrics_triangle_and_empty():
    m = graph_metrics(mk(3, [(0, 1), (1, 2), (0, 2)]))
    assert m.max_vdeg == m.max_edeg == 2
    assert m.diameters == (1,)
    empty = graph_metrics(Multigraph(0))
    assert empty.components == () and empty.diameters == ()
    assert empty.max_vdeg == empty.max_edeg == 0


def test_metrics_per_component():
    g = mk(5, [(0, 1), (1, 2), (3, 4)])
    m = graph_metrics(g)
    assert m.components == ((0, 1, 2), (3, 4))
    assert m.diameters == (2, 1)


def test_cut_quantities_theta3_pole():
    q = cut_quantities(mk(2, [(0, 1, 3)]), {1}, 1)
    assert q.neighbors == {0}
    assert q.boundary == ((0, 1),) * 3
    assert q.component == {1}


def test_cut_quantities_triangle_pair():
    q = cut_quantities(mk(3, [(0, 1), (1, 2), (0, 2)]), {1, 2}, 1)
    assert q.neighbors == {0}
    assert len(q.boundary) == 2
    assert q.component == {1, 2}


def test_cut_quantities_full_set():
    g = mk(4, [(0, 1), (2, 3)])
    q = cut_quantities(g, set(g.vertices()), 2)
    assert q.neighbors == frozenset() and q.boundary == ()
    assert q.component == {2, 3}


def test_cut_quantities_requires_membership():
    with pytest.raises(ValueError):
        cut_quantities(mk(2, [(0, 1)]), {0}, 1)
    with pytest.raises(ValueError):
        cut_quantities(mk(2, [(0, 1)]), {0, 5}, 0)


def test_neighbor_bound_by_boundary_edges():
    # each boundary neighbor contributes at least one boundary edge
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(1, 10)
        g = random_multigraph(rng, n, max_mult=3)
        size = rng.randint(1, n)
        members = set(rng.sample(range(n), size))
        v = rng.choice(sorted(members))
        q = cut_quantities(g, members, v)
        assert len(q.neighbors) <= len(q.boundary)
