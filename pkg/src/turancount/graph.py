"""Bitset-backed simple graphs and the extremal constructions.

Vertices are integers 0..n-1 and each adjacency row is a Python int used
as a bitset, so everything fits a single machine word for n <= 62 (the
graph6 single-line limit).
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 62

GRAPH6_HEADER = ">>graph6<<"


class Graph:
    """Immutable undirected simple graph on at most 62 vertices."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj=None, _validate: bool = True):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if _validate:
            if len(adj) != n:
                raise ValueError("adjacency row count does not match n")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise ValueError(f"neighbor bit of vertex {v} outside [0, {n})")
                if row >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
                for u in bits(row):
                    if not adj[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Edges as (u, v) pairs with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def non_edges(self):
        """Vertex pairs (u, v), u < v, that are not edges, lexicographic."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv added (no-op if present)."""
        if u == v:
            raise ValueError("loops are not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, _validate=False)

    def delete_vertices(self, drop) -> "Graph":
        """Induced subgraph after removing the given vertices.

        Survivors keep their relative order and are relabeled 0..m-1.
        """
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, keep) -> "Graph":
        keep = list(keep)
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            row = self.adj[v]
            for u in keep:
                if row >> u & 1:
                    adj[i] |= 1 << index[u]
        return Graph(len(keep), adj, _validate=False)


def bits(mask: int):
    """Iterate the set bit positions of a nonnegative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete(m: int) -> Graph:
    """K_m."""
    if not 0 <= m <= MAX_VERTICES:
        raise ValueError(f"order {m} outside [0, {MAX_VERTICES}]")
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << v) for v in range(m)), _validate=False)


def empty_graph(m: int) -> Graph:
    """Edgeless graph on m vertices."""
    if not 0 <= m <= MAX_VERTICES:
        raise ValueError(f"order {m} outside [0, {MAX_VERTICES}]")
    return Graph(m, (0,) * m, _validate=False)


def path(m: int) -> Graph:
    """P_m, the path on m vertices."""
    g = empty_graph(m)
    for v in range(m - 1):
        g = g.add_edge(v, v + 1)
    return g


def cycle(m: int) -> Graph:
    """C_m, the cycle on m vertices (m >= 3)."""
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    g = path(m)
    return g.add_edge(m - 1, 0)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g + h with h's vertices relabeled above g's."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"combined order {n} exceeds {MAX_VERTICES}")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, adj, _validate=False)


def join(g: Graph, h: Graph) -> Graph:
    """g v h: disjoint union plus every cross edge."""
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << u.n) - 1) ^ gmask
    adj = [row | hmask for row in u.adj[: g.n]]
    adj += [row | gmask for row in u.adj[g.n:]]
    return Graph(u.n, adj, _validate=False)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)),
                 _validate=False)


def construct_G(n: int, c: int, k: int) -> Graph:
    """The extremal family member K_k v (K_{c+1-2k} + complement(K_{n-c-1+k})).

    Vertex order is fixed: the k hub vertices first, then the c+1-2k clique
    vertices, then the n-c-1+k independent vertices.
    """
    if k < 0 or c < 2 * k or n - 1 < c:
        raise ValueError(f"need n-1 >= c >= 2k >= 0, got n={n}, c={c}, k={k}")
    inner = disjoint_union(complete(c + 1 - 2 * k), empty_graph(n - c - 1 + k))
    return join(complete(k), inner)


def construct_F(n: int, c: int) -> Graph:
    """K_1 v (alpha*K_{c-1} + K_beta) where n-1 = alpha(c-1) + beta.

    Vertex 0 is the shared cut vertex; each K_{c-1} block follows in order,
    then the K_beta remnant (absent when beta = 0).
    """
    if n < 1 or c < 2:
        raise ValueError(f"need n >= 1 and c >= 2, got n={n}, c={c}")
    alpha, beta = divmod(n - 1, c - 1)
    blocks = empty_graph(0)
    for _ in range(alpha):
        blocks = disjoint_union(blocks, complete(c - 1))
    blocks = disjoint_union(blocks, complete(beta))
    return join(complete(1), blocks)


def construct_H(n: int, p: int) -> Graph:
    """alpha*K_p + K_beta where n = alpha*p + beta, 0 <= beta <= p-1."""
    if n < 0 or p < 1:
        raise ValueError(f"need n >= 0 and p >= 1, got n={n}, p={p}")
    alpha, beta = divmod(n, p)
    g = empty_graph(0)
    for _ in range(alpha):
        g = disjoint_union(g, complete(p))
    return disjoint_union(g, complete(beta))


def construct_Krs_star(r: int, s: int) -> Graph:
    """K_{r,s} with the size-r side completed, i.e. K_r v complement(K_s)."""
    if r < 1 or s < 1:
        raise ValueError("both part sizes must be positive")
    return join(complete(r), empty_graph(s))


def from_graph6(text: str) -> Graph:
    """Parse one graph6 line (optionally prefixed by the format header)."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in line]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("graph6 byte outside the printable range 63..126")
    if data[0] == 63:  # 0x7e prefix: order >= 63
        raise ValueError(f"graph6 order exceeds {MAX_VERTICES}")
    n = data[0]
    body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    # padding bits must be zero
    if need and body[-1] & ((1 << (-idx) % 6) - 1):
        raise ValueError("nonzero trailing bits in graph6 body")
    return Graph(n, adj, _validate=False)


def to_graph6(g: Graph) -> str:
    """Encode as a single graph6 line (no header, no newline)."""
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)
