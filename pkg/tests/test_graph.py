"""Graph core: constructions, operations and graph6 round trips."""

import random

import pytest

from turancount.graph import (Graph, complement, complete, construct_F,
                              construct_G, construct_H, construct_Krs_star,
                              cycle, disjoint_union, empty_graph, from_graph6,
                              join, path, to_graph6)


def test_basic_construction_and_validation():
    g = Graph(3, [0b110, 0b001, 0b001])
    assert g.n == 3
    assert g.edges() == [(0, 1), (0, 2)]
    assert g.edge_count() == 2
    assert g.degree(0) == 2 and g.degree(1) == 1
    assert g.has_edge(0, 1) and not g.has_edge(1, 2)
    assert g.non_edges() == [(1, 2)]


def test_validation_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b10])  # loop at 0
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])  # neighbor out of range
    with pytest.raises(ValueError):
        Graph(2, [0])  # row count mismatch
    with pytest.raises(ValueError):
        Graph(63)


def test_graph_is_immutable_and_hashable():
    g = complete(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert g == complete(4)
    assert hash(g) == hash(complete(4))
    assert g != path(4)


def test_named_graphs():
    assert complete(5).edge_count() == 10
    assert empty_graph(5).edge_count() == 0
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(4).edge_count() == 4
    with pytest.raises(ValueError):
        cycle(2)
    assert complete(0).n == 0


def test_union_join_complement():
    g = disjoint_union(complete(2), complete(3))
    assert g.n == 5
    assert g.edge_count() == 1 + 3
    j = join(complete(2), complete(3))
    assert j.edge_count() == 1 + 3 + 6
    assert j == complete(5)
    assert complement(empty_graph(4)) == complete(4)
    assert complement(complement(path(5))) == path(5)


def test_add_edge_and_delete_vertices():
    g = path(4).add_edge(3, 0)
    assert g == cycle(4)
    assert g.add_edge(0, 3) == g  # already present
    with pytest.raises(ValueError):
        g.add_edge(1, 1)
    h = complete(5).delete_vertices([0, 2])
    assert h == complete(3)
    sub = cycle(5).induced_subgraph([0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_construct_G_shape():
    # k hubs joined to everything, then a clique block, then independents
    g = construct_G(8, 5, 2)
    assert g.n == 8
    for hub in range(2):
        assert g.degree(hub) == 7
    for v in range(2, 4):  # clique block of order c+1-2k = 2
        assert g.degree(v) == 3
    for v in range(4, 8):  # independent vertices see only the hubs
        assert g.degree(v) == 2
    # degenerate corners: k = 0 with c = n-1 collapses to the full clique
    assert construct_G(5, 4, 0) == complete(5)
    assert construct_G(6, 5, 0) == complete(6)
    for bad in ((4, 4, 1), (6, 3, 2), (6, 5, -1)):
        with pytest.raises(ValueError):
            construct_G(*bad)


def test_construct_F_shape():
    # n-1 = alpha(c-1) + beta blocks through one cut vertex
    f = construct_F(7, 4)  # 6 = 2*3, two K_3 blocks
    assert f.n == 7
    assert f.degree(0) == 6
    assert f.edge_count() == 6 + 2 * 3
    f2 = construct_F(8, 4)  # 7 = 2*3 + 1, remnant K_1
    assert f2.n == 8 and f2.edge_count() == 7 + 2 * 3
    with pytest.raises(ValueError):
        construct_F(5, 1)
    with pytest.raises(ValueError):
        construct_F(0, 3)


def test_construct_H_shape():
    h = construct_H(11, 4)  # 2*K_4 + K_3
    assert h.n == 11
    assert h.edge_count() == 2 * 6 + 3
    assert construct_H(8, 4).edge_count() == 12
    with pytest.raises(ValueError):
        construct_H(5, 0)


def test_construct_Krs_star():
    g = construct_Krs_star(3, 4)
    assert g.n == 7
    assert g.edge_count() == 3 + 3 * 4
    for v in range(3, 7):
        assert g.degree(v) == 3
    with pytest.raises(ValueError):
        construct_Krs_star(0, 2)


def test_graph6_known_encodings():
    # standard examples: K_4 and the 5-cycle
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("C~") == complete(4)
    assert from_graph6("Dhc") == cycle(5)
    assert to_graph6(cycle(5)) == "Dhc"
    assert from_graph6(">>graph6<<C~") == complete(4)
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6("?").n == 0


def test_graph6_round_trip_random():
    rng = random.Random(4242)
    for _ in range(300):
        n = rng.randrange(0, 13)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.4:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, adj)
        assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_malformed():
    for bad in ("", "C~~", "C", "C\x1f", chr(63 + 63)):
        with pytest.raises(ValueError):
            from_graph6(bad)
    # n=5 uses 10 of 12 body bits; setting the 2 padding bits must fail
    with pytest.raises(ValueError):
        from_graph6("D?" + chr(63 + 3))


def test_graph6_matches_reference_encoder():
    """Cross-check the encoding against networkx's graph6 writer."""
    nx = pytest.importorskip("networkx")
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randrange(1, 11)
        g = empty_graph(n)
        ref = nx.empty_graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    g = g.add_edge(u, v)
                    ref.add_edge(u, v)
        expected = nx.readwrite.graph6.to_graph6_bytes(ref, header=False)
        assert to_graph6(g) == expected.decode().strip()
