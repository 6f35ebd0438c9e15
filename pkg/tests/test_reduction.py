"""Reduction procedures: cores, closures and parameter-preserving saturation."""

import random

import pytest

from turancount.graph import (Graph, complete, cycle, disjoint_union,
                              empty_graph, join, path)
from turancount.invariants import circumference, matching_number
from turancount.reduction import (closure, disintegrate, saturate_circumference,
                                  saturate_matching)


def random_graph(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj, _validate=False)


def test_disintegrate_basic():
    # a triangle with a pendant path: the 2-core is the triangle
    g = cycle(3)
    g = disjoint_union(g, path(2))
    g = g.add_edge(2, 3)
    res = disintegrate(g, 1)
    assert res.core == cycle(3)
    assert res.core_vertices == (0, 1, 2)
    assert res.elimination_order == (4, 3)
    assert res.survivor_map == {0: 0, 1: 1, 2: 2}


def test_disintegrate_everything_dies():
    res = disintegrate(path(5), 1)
    assert res.core.n == 0
    assert sorted(res.elimination_order) == [0, 1, 2, 3, 4]
    res2 = disintegrate(complete(4), 5)
    assert res2.core.n == 0


def test_disintegrate_threshold_zero():
    g = disjoint_union(complete(3), empty_graph(2))
    res = disintegrate(g, 0)
    assert res.core == complete(3)


def test_core_survivors_all_exceed_threshold():
    rng = random.Random(2)
    for _ in range(50):
        g = random_graph(rng, 7, 0.35)
        for t in range(0, 4):
            core = disintegrate(g, t).core
            assert all(core.degree(v) > t for v in range(core.n))


def test_core_order_independence():
    """The surviving vertex set never depends on the deletion order."""
    rng = random.Random(314)
    for _ in range(40):
        g = random_graph(rng, 7, 0.4)
        for t in range(0, 4):
            reference = disintegrate(g, t).core_vertices
            for seed in range(20):
                res = disintegrate(g, t, rng=random.Random(seed))
                assert res.core_vertices == reference


def test_closure_basic():
    # two endpoints of P_4 have degree sum 2; threshold 2 completes nothing new
    # between adjacent pairs but closes the long diagonal chain to K_4
    assert closure(path(4), 2) == complete(4)
    assert closure(path(4), 5) == path(4)
    assert closure(cycle(5), 4) == complete(5)
    assert closure(cycle(5), 5) == cycle(5)
    assert closure(empty_graph(4), 0) == complete(4)
    assert closure(empty_graph(4), 1) == empty_graph(4)


def test_closure_order_independence():
    rng = random.Random(1001)
    for _ in range(40):
        g = random_graph(rng, 7, 0.4)
        for threshold in (3, 5, 7):
            reference = closure(g, threshold)
            for seed in range(20):
                assert closure(g, threshold, rng=random.Random(seed)) == reference


def test_closure_is_idempotent_supergraph():
    rng = random.Random(77)
    for _ in range(30):
        g = random_graph(rng, 6, 0.5)
        c = closure(g, 5)
        assert set(g.edges()) <= set(c.edges())
        assert closure(c, 5) == c


def test_closure_preserves_matching_bound():
    """Degree-sum closure at 2k+1 cannot create a matching above k."""
    rng = random.Random(40)
    for _ in range(60):
        g = random_graph(rng, 6, 0.3)
        am = matching_number(g)
        for k in (1, 2):
            if am <= k:
                assert matching_number(closure(g, 2 * k + 1)) <= k


def test_saturate_circumference():
    g = cycle(5)
    sat = saturate_circumference(g, 5)
    assert circumference(sat) == 5
    # every further addition must push the circumference up
    for u, v in sat.non_edges():
        assert circumference(sat.add_edge(u, v)) > 5
    with pytest.raises(ValueError):
        saturate_circumference(cycle(5), 4)


def test_saturate_matching():
    g = path(5)  # matching number 2
    sat = saturate_matching(g, 2)
    assert matching_number(sat) == 2
    for u, v in sat.non_edges():
        assert matching_number(sat.add_edge(u, v)) > 2
    with pytest.raises(ValueError):
        saturate_matching(path(5), 3)


def test_saturation_fixed_points_random():
    rng = random.Random(6060)
    for _ in range(25):
        g = random_graph(rng, 6, 0.3)
        c = circumference(g)
        sat = saturate_circumference(g, c)
        assert circumference(sat) == c
        for u, v in sat.non_edges():
            assert circumference(sat.add_edge(u, v)) > c
        a = matching_number(g)
        satm = saturate_matching(g, a)
        assert matching_number(satm) == a
        for u, v in satm.non_edges():
            assert matching_number(satm.add_edge(u, v)) > a
