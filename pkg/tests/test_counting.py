"""Copy counting: dual counting routes, an independent partition oracle,
and the automorphism bookkeeping that ties them together."""

import random
from itertools import combinations

import pytest

from turancount.counting import (PartSpec, aut_order, count_copies,
                                 count_copies_complete, count_copies_through,
                                 count_embeddings, multinomial)
from turancount.graph import (Graph, complete, construct_Krs_star, cycle,
                              disjoint_union, empty_graph, join, path)


def oracle_count(g, spec):
    """Count copies the dumb way: every r-subset, every unordered partition
    of it into classes with the right size multiset, checked edge by edge."""
    from itertools import permutations
    sizes = spec.parts
    found = set()
    for subset in combinations(range(g.n), spec.r):
        for perm in permutations(subset):
            part = []
            at = 0
            for size in sizes:
                part.append(perm[at:at + size])
                at += size
            ok = True
            for i in range(len(part)):
                for j in range(i + 1, len(part)):
                    for u in part[i]:
                        for v in part[j]:
                            if not g.has_edge(u, v):
                                ok = False
            if ok:
                found.add(frozenset(frozenset(cls) for cls in part))
    return len(found)


def random_graph(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj, _validate=False)


SPECS = [PartSpec(p) for p in
         ((1, 1), (2, 1), (2, 2), (1, 1, 1), (2, 1, 1), (3, 2), (3,), (1,))]


def test_partspec_canonicalization():
    assert PartSpec((1, 2)).parts == (2, 1)
    assert str(PartSpec((1, 2, 2))) == "2,2,1"
    assert PartSpec.parse("1,2,1").parts == (2, 1, 1)
    assert PartSpec((2, 1)) == PartSpec((1, 2))
    assert PartSpec((2, 2, 1)).r == 5 and PartSpec((2, 2, 1)).s == 3
    assert PartSpec((3, 2, 2, 1)).distinct() == [(3, 1), (2, 2), (1, 1)]
    assert PartSpec((2, 2, 1)).multiplicity_product() == 2
    assert PartSpec((2, 2, 1)).remove_one(2) == PartSpec((2, 1))
    assert PartSpec((2,)).remove_one(2) is None
    for bad in ("", "a", "2,0", "2,-1"):
        with pytest.raises(ValueError):
            PartSpec.parse(bad)


def test_aut_order():
    assert aut_order(PartSpec((1, 1))) == 2       # K_2
    assert aut_order(PartSpec((1, 1, 1))) == 6    # K_3
    assert aut_order(PartSpec((2, 1))) == 2       # path on 3 vertices
    assert aut_order(PartSpec((2, 2))) == 8       # 4-cycle
    assert aut_order(PartSpec((3, 2))) == 12
    assert aut_order(PartSpec((2, 2, 2))) == 48   # octahedron


def test_multinomial():
    assert multinomial((2, 1)) == 3
    assert multinomial((2, 2)) == 6
    assert multinomial((1, 1, 1)) == 6
    assert multinomial((3, 2)) == 10
    assert multinomial(()) == 1


def test_counts_in_cliques():
    # K_m holds multinomial/spec-sym copies per r-subset
    for m in range(0, 10):
        for spec in SPECS:
            expected = count_copies_complete(m, spec)
            assert count_copies(complete(m), spec) == expected, (m, spec)
    assert count_copies_complete(4, PartSpec((2, 2))) == 3  # 4-cycles of K_4
    assert count_copies_complete(4, PartSpec((2, 1, 1))) == 6
    assert count_copies_complete(5, PartSpec((1, 1))) == 10


def test_simple_template_counts():
    # {1,1} copies are edges, {2,1} copies are paths on 3 vertices
    g = cycle(5)
    assert count_copies(g, PartSpec((1, 1))) == 5
    assert count_copies(g, PartSpec((2, 1))) == 5
    assert count_copies(g, PartSpec((1, 1, 1))) == 0
    assert count_copies(path(4), PartSpec((2, 1))) == 2
    # a single part is an independent-set template: no edge constraints
    assert count_copies(empty_graph(6), PartSpec((3,))) == 20
    assert count_copies(cycle(4), PartSpec((2, 2))) == 1
    assert count_copies(construct_Krs_star(2, 3), PartSpec((3, 2))) == 1
    assert count_copies(disjoint_union(complete(3), complete(3)),
                        PartSpec((1, 1, 1))) == 2


def test_embeddings_vs_copies_dual_route():
    """embeddings = copies * |Aut| must hold on arbitrary graphs."""
    rng = random.Random(1234)
    for _ in range(80):
        g = random_graph(rng, rng.randrange(2, 8), rng.choice([0.3, 0.5, 0.8]))
        for spec in SPECS:
            emb = count_embeddings(g, spec)
            cop = count_copies(g, spec)
            assert emb == cop * aut_order(spec), (g.adj, spec)


def test_counts_match_partition_oracle():
    rng = random.Random(5150)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(2, 8), rng.choice([0.3, 0.6]))
        for spec in SPECS:
            assert count_copies(g, spec) == oracle_count(g, spec), (g.adj, spec)


def test_monotone_under_edge_addition():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, 7, 0.4)
        non = g.non_edges()
        if not non:
            continue
        u, v = rng.choice(non)
        bigger = g.add_edge(u, v)
        for spec in SPECS:
            assert count_copies(bigger, spec) >= count_copies(g, spec)


def test_count_copies_through():
    k4 = complete(4)
    # every triangle of K_4 misses exactly one vertex
    assert count_copies_through(k4, PartSpec((1, 1, 1)), 0) == 3
    star = join(complete(1), empty_graph(4))
    assert count_copies_through(star, PartSpec((2, 1)), 0) == 6
    with pytest.raises(ValueError):
        count_copies_through(k4, PartSpec((1, 1)), 4)
    # inclusion-exclusion against the oracle on random graphs
    rng = random.Random(88)
    for _ in range(20):
        g = random_graph(rng, 6, 0.5)
        for spec in SPECS[:5]:
            total = sum(count_copies_through(g, spec, v) for v in range(g.n))
            assert total == spec.r * count_copies(g, spec)


def test_oversized_template():
    assert count_copies(complete(3), PartSpec((2, 2))) == 0
    assert count_embeddings(complete(3), PartSpec((2, 2))) == 0
