"""Closed-form copy counts for the extremal families and the theorem bounds.

The two forms of the g function (termwise sum vs. telescoped) are kept as
independent code paths on purpose: their equality over the whole domain is
a strong self-test of the underlying binomial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .counting import PartSpec, count_copies_complete, multinomial

THEOREM_IDS = ("T1", "T2", "T3", "C8", "C9", "C10", "C14", "C17")


def binomial(n: int, k: int) -> int:
    """C(n, k), total: 0 whenever k < 0, k > n or n < 0.

    The vanishing convention matters: several sum terms rely on out-of-range
    binomials dropping out.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _check_g_domain(n: int, c: int, k: int):
    if k < 0 or c < 2 * k or n - 1 < c:
        raise ValueError(f"g domain violated: need n-1 >= c >= 2k >= 0, "
                         f"got n={n}, c={c}, k={k}")


def g_formula_sum(n: int, c: int, k: int, spec: PartSpec) -> int:
    """Copy count in the (n, c, k) family, evaluated as the double sum:
    one inner term per independent vertex peeled off, plus the core clique.
    """
    _check_g_domain(n, c, k)
    r = spec.r
    denom = spec.multiplicity_product()
    total = Fraction(0)
    for i in range(1, n - c - 1 + k + 1):
        for rj in spec.parts:
            reduced = spec.remove_one(rj)
            p = multinomial(reduced.parts) if reduced else 1
            total += Fraction(p * binomial(k, r - rj)
                              * binomial(n - r + rj - i, rj - 1), denom)
    total += Fraction(multinomial(spec.parts) * binomial(c + 1 - k, r), denom)
    if total.denominator != 1:
        raise AssertionError("g sum did not reduce to an integer")
    return int(total)


def g_formula_closed(n: int, c: int, k: int, spec: PartSpec) -> int:
    """Same quantity with the inner sum telescoped into a binomial difference."""
    _check_g_domain(n, c, k)
    r = spec.r
    denom = spec.multiplicity_product()
    total = Fraction(multinomial(spec.parts) * binomial(c + 1 - k, r), denom)
    for ri in spec.parts:
        reduced = spec.remove_one(ri)
        p = multinomial(reduced.parts) if reduced else 1
        total += Fraction(p * binomial(k, r - ri)
                          * (binomial(n - r + ri, ri)
                             - binomial(c + 1 - k - r + ri, ri)), denom)
    if total.denominator != 1:
        raise AssertionError("g closed form did not reduce to an integer")
    return int(total)


def _count_in_disjoint_cliques(clique_orders, spec: PartSpec) -> int:
    """N(K_R, disjoint union of cliques)."""
    if spec.s == 1:
        # single part: an edgeless template, any r vertices qualify
        return binomial(sum(clique_orders), spec.r)
    return sum(count_copies_complete(m, spec) for m in clique_orders)


def _count_in_cone_over_cliques(clique_orders, spec: PartSpec | None) -> int:
    """N(K_R, K_1 v (disjoint union of cliques)).

    Copies avoiding the apex live inside one clique (or, for single-part
    templates, anywhere).  A copy containing the apex is determined by the
    apex's class size and the restriction of the copy to the base, which is
    a copy of the spec with that class shrunk by one; the shrunken class can
    be any base class of the right size, giving its multiplicity as factor.
    """
    if spec is None:
        return 1  # the empty template has exactly one (empty) copy
    total = _count_in_disjoint_cliques(clique_orders, spec)
    for size, _ in spec.distinct():
        if size == 1:
            reduced = spec.remove_one(1)
            ways = 1
        else:
            parts = list(spec.parts)
            parts.remove(size)
            reduced = PartSpec(tuple(parts) + (size - 1,))
            ways = dict(reduced.distinct())[size - 1]
        total += ways * _count_in_cliques_or_empty(clique_orders, reduced)
    return total


def _count_in_cliques_or_empty(clique_orders, spec: PartSpec | None) -> int:
    if spec is None:
        return 1
    return _count_in_disjoint_cliques(clique_orders, spec)


def f_formula(n: int, c: int, spec: PartSpec) -> int:
    """Copy count in the one-cut-vertex chain of cliques on n vertices.

    Decomposes n-1 = alpha(c-1) + beta and counts inside
    K_1 v (alpha K_{c-1} + K_beta) exactly, including the copies that pass
    through the shared cut vertex with classes in different blocks.
    """
    if n < 1 or c < 2:
        raise ValueError(f"need n >= 1 and c >= 2, got n={n}, c={c}")
    alpha, beta = divmod(n - 1, c - 1)
    orders = [c - 1] * alpha + ([beta] if beta else [])
    return _count_in_cone_over_cliques(orders, spec)


def h_formula(n: int, p: int, spec: PartSpec) -> int:
    """Copy count in alpha K_p + K_beta where n = alpha p + beta."""
    if n < 0 or p < 1:
        raise ValueError(f"need n >= 0 and p >= 1, got n={n}, p={p}")
    alpha, beta = divmod(n, p)
    orders = [p] * alpha + ([beta] if beta else [])
    return _count_in_disjoint_cliques(orders, spec)


def bound(theorem_id: str, spec: PartSpec, n: int, c: int | None = None,
          p: int | None = None, alpha_prime: int | None = None,
          k: int | None = None) -> int:
    """The published upper bound for one theorem or corollary.

    T1/C8/C14 take the circumference c, T2/C9/C17 the detour order p and
    T3/C10 the matching number alpha_prime.  C8, C9 and C10 fix k to 2, 1
    and 0 respectively; T1-T3 require it.
    """
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    if theorem_id in ("T1", "C8", "C14"):
        if c is None:
            raise ValueError(f"{theorem_id} needs the circumference c")
        t = c // 2
        if theorem_id == "C14":
            return max(f_formula(n, c, spec), g_formula_sum(n, c, t, spec))
        k = {"C8": 2}.get(theorem_id, k)
        if k is None:
            raise ValueError("T1 needs the minimum-degree parameter k")
        return max(g_formula_sum(n, c, k, spec), g_formula_sum(n, c, t, spec))
    if theorem_id in ("T2", "C9", "C17"):
        if p is None:
            raise ValueError(f"{theorem_id} needs the detour order p")
        t = (p - 1) // 2
        if theorem_id == "C17":
            return max(h_formula(n, p, spec), g_formula_sum(n, p - 1, t, spec))
        k = {"C9": 1}.get(theorem_id, k)
        if k is None:
            raise ValueError("T2 needs the minimum-degree parameter k")
        return max(g_formula_sum(n, p - 1, k, spec),
                   g_formula_sum(n, p - 1, t, spec))
    # T3 / C10
    if alpha_prime is None:
        raise ValueError(f"{theorem_id} needs the matching number alpha_prime")
    if n < 2 * alpha_prime + 2:
        raise ValueError("matching bounds need n >= 2*alpha' + 2")
    k = 0 if theorem_id == "C10" else k
    if k is None:
        raise ValueError("T3 needs the minimum-degree parameter k")
    return max(g_formula_sum(n, 2 * alpha_prime, k, spec),
               g_formula_sum(n, 2 * alpha_prime, alpha_prime, spec))


@dataclass(frozen=True)
class ConvexityReport:
    n: int
    c: int
    spec: PartSpec
    second_differences: tuple  # (k, g(k+1) + g(k-1) - 2 g(k)) pairs
    all_nonnegative: bool


def convexity_report(n: int, c: int, spec: PartSpec, k_range=None) -> ConvexityReport:
    """Second differences of g in k; convexity holds iff all are >= 0.

    k_range defaults to every interior k with k-1 and k+1 in the domain.
    """
    if k_range is None:
        k_range = range(1, c // 2)
    diffs = []
    cache = {}

    def g(k):
        if k not in cache:
            cache[k] = g_formula_sum(n, c, k, spec)
        return cache[k]

    for k in k_range:
        if k - 1 < 0 or 2 * (k + 1) > c:
            continue
        diffs.append((k, g(k + 1) + g(k - 1) - 2 * g(k)))
    return ConvexityReport(n=n, c=c, spec=spec,
                           second_differences=tuple(diffs),
                           all_nonnegative=all(d >= 0 for _, d in diffs))
