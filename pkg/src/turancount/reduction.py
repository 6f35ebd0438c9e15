"""Graph reduction procedures: degree-threshold disintegration (cores),
degree-sum closures and edge-maximal saturation.

Deletion and scan orders are lexicographic by default; the randomized
order arguments exist only so the order-independence properties can be
exercised by tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, bits
from .invariants import circumference, matching_number


@dataclass(frozen=True)
class DisintegrationResult:
    core: Graph  # null graph (n=0) when everything disintegrates
    elimination_order: tuple  # original vertex ids, in deletion order
    survivor_map: dict  # original id -> core id

    @property
    def core_vertices(self):
        """Surviving original vertex ids, ascending."""
        return tuple(sorted(self.survivor_map))


def disintegrate(g: Graph, t: int, rng: random.Random | None = None) -> DisintegrationResult:
    """Iteratively delete vertices of current degree <= t; the survivor is
    the (t+1)-core.  With rng, deletion ties are broken randomly instead of
    lexicographically (the core itself is order-independent).
    """
    alive = (1 << g.n) - 1
    rows = list(g.adj)
    order = []
    while True:
        victims = [v for v in bits(alive) if bin(rows[v]).count("1") <= t]
        if not victims:
            break
        v = victims[0] if rng is None else rng.choice(victims)
        alive &= ~(1 << v)
        order.append(v)
        for u in bits(rows[v]):
            rows[u] &= ~(1 << v)
        rows[v] = 0
    survivors = list(bits(alive))
    survivor_map = {v: i for i, v in enumerate(survivors)}
    return DisintegrationResult(core=g.induced_subgraph(survivors),
                                elimination_order=tuple(order),
                                survivor_map=survivor_map)


def closure(g: Graph, threshold: int, rng: random.Random | None = None) -> Graph:
    """Join nonadjacent pairs with degree sum >= threshold until stable."""
    adj = list(g.adj)
    deg = [bin(row).count("1") for row in adj]
    changed = True
    while changed:
        changed = False
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                 if not adj[u] >> v & 1 and deg[u] + deg[v] >= threshold]
        if not pairs:
            break
        if rng is not None:
            rng.shuffle(pairs)
        for u, v in pairs:
            if not adj[u] >> v & 1 and deg[u] + deg[v] >= threshold:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                changed = True
    return Graph(g.n, adj, _validate=False)


def saturate_circumference(g: Graph, c: int) -> Graph:
    """Add non-edges in lexicographic order while the circumference stays c.

    The result is one canonical edge-maximal supergraph with circumference
    exactly c.
    """
    if circumference(g) != c:
        raise ValueError(f"graph has circumference {circumference(g)}, not {c}")
    for u, v in g.non_edges():
        candidate = g.add_edge(u, v)
        if circumference(candidate) <= c:
            g = candidate
    return g


def saturate_matching(g: Graph, a: int) -> Graph:
    """Lexicographic greedy edge additions preserving matching number a."""
    if matching_number(g) != a:
        raise ValueError(f"graph has matching number {matching_number(g)}, not {a}")
    for u, v in g.non_edges():
        candidate = g.add_edge(u, v)
        if matching_number(candidate) <= a:
            g = candidate
    return g
