import pytest

import sdfs


def bowtie():
    return sdfs.Graph(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])


def test_graph_round_trip():
    g = bowtie()
    assert (g.n, g.m, g.directed) == (5, 6, False)
    assert sorted(g.neighbors(3)) == [1, 2, 4, 5]
    h = sdfs.Graph.parse(g.serialize())
    assert h.edges() == g.edges()


def test_parse_error():
    with pytest.raises(sdfs.ParseError):
        sdfs.Graph.parse("p 2 1 u\ne 1 7\n")


def test_dfs_variants_agree():
    g = sdfs.Graph(64, [(i, i % 64 + 1) for i in range(1, 65)] + [(1, 33), (5, 40)])
    dense, stats = sdfs.dfs(g)
    assert dense[0] == ("pre", 1)
    assert stats["inspections"] > 0
    for algo in ("grouped", "loglog", "logstar", "fixed-k"):
        events, _ = sdfs.dfs(g, algo=algo)
        assert events == dense
    assert sdfs.format_events(g)[0] == "pre 1"


def test_scc_and_toposort():
    cyc = sdfs.Graph(3, [(1, 2), (2, 3), (3, 1)], directed=True)
    for algo in ("euler", "parent"):
        assert [sorted(c) for c in sdfs.scc(cyc, algo)] == [[1, 2, 3]]
    chain = sdfs.Graph(3, [(1, 2), (2, 3)], directed=True)
    assert sdfs.toposort(chain) == [1, 2, 3]
    with pytest.raises(sdfs.CyclicGraphError):
        sdfs.toposort(cyc)


def test_components_dense_and_sparse():
    g = bowtie()
    assert sdfs.cut_vertices(g) == [3]
    assert sdfs.bridges(g) == []
    dense = sdfs.components(g, "bcc")
    assert sorted(sorted(v) for v, _ in dense) == [[1, 2, 3], [3, 4, 5]]
    for algo in ("logstar", "fixed-k"):
        sparse = sdfs.components(g, "bcc", algo=algo)
        assert sorted(sorted(v) for v, _ in sparse) == sorted(sorted(v) for v, _ in dense)
    with pytest.raises(sdfs.ModeError):
        sdfs.components(sdfs.Graph(2, [(1, 2)], directed=True))


def test_query():
    g = bowtie()
    vertices, edges = sdfs.query(g, 4, 5)
    assert sorted(vertices) == [3, 4, 5]
    assert len(edges) == 3
    with pytest.raises(sdfs.UnknownEdgeError):
        sdfs.query(g, 1, 4)
