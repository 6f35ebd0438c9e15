"""Exact graph parameters: degree, connectivity, circumference, detour
order and matching number.

Everything here is exact backtracking on bitset adjacency; intended scale
is n <= 12 (the verification harness) with graceful degradation above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class InvariantProfile:
    min_degree: int
    connected: bool
    biconnected: bool
    circumference: int
    detour_order: int
    matching_number: int
    hamiltonian: bool
    traceable: bool


def profile(g: Graph) -> InvariantProfile:
    circ = circumference(g)
    det = detour_order(g)
    return InvariantProfile(
        min_degree=min_degree(g),
        connected=is_connected(g),
        biconnected=is_biconnected(g),
        circumference=circ,
        detour_order=det,
        matching_number=matching_number(g),
        hamiltonian=g.n >= 3 and circ == g.n,
        traceable=g.n >= 1 and det == g.n,
    )


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(g.degree(v) for v in range(g.n))


def _reach(adj, start: int, active: int) -> int:
    """Bitset of vertices reachable from start inside the active set."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= active & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return _reach(g.adj, 0, full) == full


def is_biconnected(g: Graph) -> bool:
    """Connected, n >= 3 and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full ^ (1 << v)
        start = 0 if v != 0 else 1
        if _reach(g.adj, start, rest) != rest:
            return False
    return True


def circumference(g: Graph) -> int:
    """Length of a longest cycle; 0 when the graph is acyclic."""
    n, adj = g.n, g.adj
    if n < 3:
        return 0
    best = 0
    # Anchor every cycle at its minimum vertex and only extend upward.
    for anchor in range(n - 2):
        best = _longest_cycle_from(adj, n, anchor, best)
        if best == n:
            break
    return best


def _longest_cycle_from(adj, n: int, anchor: int, best: int) -> int:
    anchor_bit = 1 << anchor
    above = ((1 << n) - 1) & (-1 << anchor)

    def rec(v: int, used: int, length: int):
        nonlocal best
        if length >= 3 and adj[v] & anchor_bit and length > best:
            best = length
        rem = above & ~used
        if length + _popcount(rem) <= best:
            return
        for u in bits(adj[v] & rem):
            rec(u, used | 1 << u, length + 1)

    rec(anchor, anchor_bit, 1)
    return best


def detour_order(g: Graph) -> int:
    """Number of vertices on a longest path; 0 for the null graph."""
    n, adj = g.n, g.adj
    if n == 0:
        return 0
    full = (1 << n) - 1
    best = 1

    def rec(v: int, used: int, length: int):
        nonlocal best
        if length > best:
            best = length
        rem = full & ~used
        if length + _popcount(rem) <= best:
            return
        for u in bits(adj[v] & rem):
            rec(u, used | 1 << u, length + 1)

    for start in range(n):
        rec(start, 1 << start, 1)
        if best == n:
            break
    return best


def matching_number(g: Graph) -> int:
    """Exact maximum matching size by branching on a lowest-degree vertex."""
    return _matching(g.adj, (1 << g.n) - 1)


def _matching(adj, active_mask: int) -> int:
    best = 0

    def rec(active: int, size: int):
        nonlocal best
        pick = -1
        pick_deg = 64
        live = 0
        for v in bits(active):
            d = _popcount(adj[v] & active)
            if d:
                live += 1
                if d < pick_deg:
                    pick, pick_deg = v, d
        if pick < 0:
            if size > best:
                best = size
            return
        if size + live // 2 <= best:
            return
        for u in bits(adj[pick] & active):
            rec(active & ~(1 << pick | 1 << u), size + 1)
            if pick_deg == 1:
                return  # matching a pendant vertex is always optimal
        rec(active & ~(1 << pick), size)

    rec(active_mask, 0)
    return best
