"""Smoke tests for the chorded python module."""

import pytest

chorded = pytest.importorskip("chorded")


def complete_graph(n):
    return chorded.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n):
    return chorded.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_basics():
    g = chorded.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.m == 4
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)
    assert g.neighbors(0) == [1, 3]

    h = chorded.Graph.parse(g.serialize())
    assert h.edges() == g.edges()

    with pytest.raises(ValueError):
        chorded.Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        chorded.Graph.parse("nonsense")


def test_detection_and_oracle():
    k4 = complete_graph(4)
    w = chorded.find_chorded_cycle(k4)
    assert w is not None
    assert w.validate(k4)
    assert len(w.chords) >= 1

    c7 = cycle_graph(7)
    assert chorded.find_chorded_cycle(c7) is None
    assert chorded.is_non_chorded_bruteforce(c7)
    assert not chorded.is_non_chorded_bruteforce(k4)


def test_decomposition():
    k23 = chorded.Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    ed = chorded.ear_decompose(k23)
    assert isinstance(ed, chorded.EarDecomposition)
    assert len(ed.base_cycle) == 4
    assert len(ed.ears) == 1

    cert = chorded.ear_stem_certificate(k23, None, ed)
    assert len(cert.base_stems) == 2

    g1 = chorded.gen_g1(2)
    bc = chorded.block_cut(g1)
    assert len(bc.blocks) == 2
    assert bc.bridges == [(5, 6)]

    d = chorded.block_path_decompose(g1)
    assert isinstance(d, chorded.BlockPathDecomposition)
    assert len(d.connectors) == 1

    witness = chorded.ear_decompose(complete_graph(4))
    assert isinstance(witness, chorded.CycleWithChords)


def test_low_degree_sets():
    c6 = cycle_graph(6)
    s = chorded.nonchorded_independent_low_degree(c6)
    assert s.vertices == [0, 2, 4]
    assert (s.guarantee_num, s.guarantee_den) == (6, 12)

    tree = chorded.Graph(4, [(0, 1), (1, 2), (2, 3)])
    ts = chorded.tree_independent_low_degree(tree)
    assert len(ts.vertices) >= 1

    with pytest.raises(ValueError):
        chorded.nonchorded_independent_low_degree(complete_graph(4))


def test_sigma_and_packing():
    assert chorded.sigma(complete_graph(4), 2).value is None  # infinity
    assert chorded.sigma(cycle_graph(5), 2).value == 4

    r = chorded.max_packing(complete_graph(8), 2)
    assert r.status == "found"
    assert r.packing.total_vertices == 8
    assert r.packing.validate(complete_graph(8))

    k55 = chorded.gen_sharpness_bipartite(2, 10)
    rb = chorded.max_packing(k55, 2)
    assert rb.status == "exhausted"
    assert rb.max_found == 1

    p = chorded.minimal_packing(complete_graph(9), 2)
    assert p.total_vertices == 8

    ti = chorded.check_hypothesis(30, 1, 1, 10)
    assert ti.order_threshold == 25
    assert ti.degree_threshold == 3
    assert ti.order_ok and ti.degree_ok


def test_families_and_enumeration():
    g1 = chorded.gen_g1(3)
    assert g1.n == 18
    assert len(chorded.max_low_degree_independent(g1)) == 5  # n/6 + 2

    g2 = chorded.gen_g2(1)
    assert (g2.n, g2.m) == (12, 15)

    count = chorded.enumerate_graphs(3, "all", lambda g: True)
    assert count == 8
    seen = []
    chorded.enumerate_graphs(4, "non_chorded_biconnected", lambda g: seen.append(g.m) or True)
    assert len(seen) > 0

    ordering = chorded.degeneracy_ordering(cycle_graph(5))
    assert isinstance(ordering, chorded.VertexOrdering)
    assert ordering.max_back_degree == 2
    core = chorded.degeneracy_ordering(complete_graph(4))
    assert isinstance(core, chorded.DenseCoreWitness)
