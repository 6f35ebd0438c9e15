"""Exact counting of complete multipartite subgraph copies.

A copy of K_{r_1,...,r_s} in G is a subgraph (not necessarily induced)
isomorphic to it: s disjoint vertex classes with every cross-class pair
adjacent in G.  Within-class adjacency in G is irrelevant; this is forced
by the standard convention that cliques contain copies of every K_R on at
most as many vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial, prod

from .graph import Graph, bits


@dataclass(frozen=True)
class PartSpec:
    """Canonical multiset of part sizes, sorted descending."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if not parts or any(p < 1 for p in parts):
            raise ValueError("part sizes must be positive integers")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "PartSpec":
        """Parse the textual form "r1,r2,...,rs"."""
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed part spec {text!r}") from None
        return cls(parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    def distinct(self):
        """(size, multiplicity) pairs, sizes descending."""
        out = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return [(size, m) for size, m in out]

    def multiplicity_product(self) -> int:
        return prod(factorial(m) for _, m in self.distinct())

    def remove_one(self, size: int) -> "PartSpec | None":
        """Spec with one part of the given size dropped; None if it empties."""
        parts = list(self.parts)
        parts.remove(size)
        return PartSpec(tuple(parts)) if parts else None


def aut_order(spec: PartSpec) -> int:
    """|Aut(K_R)| = prod(r_i!) * prod(m_l!)."""
    return prod(factorial(p) for p in spec.parts) * spec.multiplicity_product()


def count_embeddings(g: Graph, spec: PartSpec) -> int:
    """Injective maps V(K_R) -> V(G) sending every cross-part pair to an edge.

    Template vertices are assigned in part-major order; candidates are the
    intersection of the adjacency rows of all previously placed vertices
    from other parts.
    """
    n, adj = g.n, g.adj
    if spec.r > n:
        return 0
    full = (1 << n) - 1
    sizes = spec.parts

    def rec(part: int, left_in_part: int, before_mask: int, part_mask: int,
            common: int) -> int:
        # before_mask: images of all completed parts; common: vertices
        # adjacent to every one of them.
        if left_in_part == 0:
            part += 1
            if part == len(sizes):
                return 1
            new_common = common
            for v in bits(part_mask):
                new_common &= adj[v]
            return rec(part, sizes[part], before_mask | part_mask, 0, new_common)
        total = 0
        for v in bits(common & ~before_mask & ~part_mask):
            total += rec(part, left_in_part - 1, before_mask,
                         part_mask | 1 << v, common)
        return total

    return rec(0, sizes[0], 0, 0, full)


def count_copies(g: Graph, spec: PartSpec) -> int:
    """N(K_R, G): the number of copies as unlabeled subgraphs.

    Enumerates the parts as vertex subsets (one combination per class, so
    within-part orderings are never generated) and divides by the number
    of orderings of equal-size parts.
    """
    n, adj = g.n, g.adj
    if spec.r > n:
        return 0
    full = (1 << n) - 1
    sizes = spec.parts

    def rec(part: int, used: int, common: int) -> int:
        if part == len(sizes):
            return 1
        size = sizes[part]
        pool = [v for v in bits(common & ~used)]
        if len(pool) < size:
            return 0
        total = 0
        for chosen in combinations(pool, size):
            new_common = common
            cmask = 0
            for v in chosen:
                new_common &= adj[v]
                cmask |= 1 << v
            if part + 1 < len(sizes) and _popcount(new_common & ~(used | cmask)) < sizes[part + 1]:
                continue
            total += rec(part + 1, used | cmask, new_common)
        return total

    ordered = rec(0, 0, full)
    denom = spec.multiplicity_product()
    if ordered % denom:
        raise AssertionError("part-tuple count not divisible by multiplicity product")
    return ordered // denom


def _popcount(x: int) -> int:
    return bin(x).count("1")


def count_copies_complete(m: int, spec: PartSpec) -> int:
    """N(K_R, K_m) in closed form."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    return multinomial(spec.parts) // spec.multiplicity_product() * comb(m, spec.r)


def count_copies_through(g: Graph, spec: PartSpec, v: int) -> int:
    """Copies of K_R in g whose vertex set contains v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside [0, {g.n})")
    return count_copies(g, spec) - count_copies(g.delete_vertices([v]), spec)


def multinomial(sizes) -> int:
    """r!/(r_1! ... r_s!) for r = sum of sizes."""
    total = 0
    out = 1
    for p in sizes:
        total += p
        out *= comb(total, p)
    return out
