"""Exhaustive small-graph certification of the counting bounds.

The built-in enumerator walks all labeled graphs on n vertices as edge
bitmasks (the bounds are isomorphism-invariant, so labeled redundancy
costs time, not correctness).  Isomorph-free input can be streamed in as
graph6 lines instead.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, permutations

from . import invariants
from .counting import PartSpec, count_copies, count_copies_complete, count_copies_through
from .formulas import bound as formula_bound
from .formulas import g_formula_sum
from .graph import Graph, bits, complete, disjoint_union, empty_graph, from_graph6, join, to_graph6
from .invariants import circumference, detour_order, matching_number
from .reduction import closure

ENUMERATION_LIMIT = 8

LEMMA_IDS = ("L6", "L7", "L11", "L12", "L13", "L15", "L16")

DEFAULT_SPECS = tuple(PartSpec(p) for p in
                      ((1, 1), (2, 1), (2, 2), (1, 1, 1), (2, 1, 1), (3, 2)))


@dataclass(frozen=True)
class FamilyFilter:
    n: int
    require_connected: bool = False
    require_biconnected: bool = False
    circumference_eq: int | None = None
    detour_eq: int | None = None
    matching_eq: int | None = None
    min_degree_ge: int | None = None
    hamiltonian_eq: bool | None = None


@dataclass(frozen=True)
class VerificationReport:
    filter: FamilyFilter
    spec: PartSpec
    theorem_id: str
    bound: int
    observed_max: int
    witnesses: tuple  # graph6 strings of maximizers, capped
    witness_total: int  # full number of maximizers
    graphs_scanned: int
    empty_family: bool
    passed: bool
    tight: bool


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    points_checked: int
    violations: tuple

    @property
    def passed(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# labeled enumeration

def _vertex_pairs(n: int):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _graph_from_mask(n: int, mask: int, pairs) -> Graph:
    adj = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= low
    return Graph(n, adj, _validate=False)


def enumerate_labeled(n: int):
    """Yield every labeled graph on [n] exactly once, in edge-mask order."""
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"labeled enumeration capped at n <= {ENUMERATION_LIMIT}")
    pairs = _vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield _graph_from_mask(n, mask, pairs)


def stream_graph6(lines, skip_malformed: bool = False, warn=None):
    """Yield graphs parsed from an iterable of graph6 lines.

    Malformed lines raise ValueError tagged with the line number, or are
    reported through warn(lineno, message) when skip_malformed is set.
    Blank lines are ignored.
    """
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield from_graph6(line)
        except ValueError as exc:
            if skip_malformed:
                if warn is not None:
                    warn(lineno, str(exc))
                continue
            raise ValueError(f"line {lineno}: {exc}") from None


# ---------------------------------------------------------------------------
# cycle-mask tables (fast circumference for the mask-level scan)

@lru_cache(maxsize=8)
def _cycle_masks(n: int):
    """Edge masks of every cycle on [n], grouped by length, longest first."""
    pairs = _vertex_pairs(n)
    bit = {pair: 1 << e for e, pair in enumerate(pairs)}
    by_len = {}
    for m in range(3, n + 1):
        masks = []
        for subset in combinations(range(n), m):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # each cycle once, up to reflection
                cyc = (first,) + perm
                cmask = 0
                for i in range(m):
                    a, b = cyc[i], cyc[(i + 1) % m]
                    cmask |= bit[(min(a, b), max(a, b))]
                masks.append(cmask)
        by_len[m] = tuple(masks)
    return by_len


def _mask_circumference(mask: int, by_len, n: int) -> int:
    for m in range(n, 2, -1):
        for cmask in by_len[m]:
            if mask & cmask == cmask:
                return m
    return 0


# ---------------------------------------------------------------------------
# family scanning

def _passes_graph(g: Graph, filt: FamilyFilter) -> bool:
    """Generic per-graph filter used for streamed input."""
    if g.n != filt.n:
        return False
    if filt.min_degree_ge is not None and invariants.min_degree(g) < filt.min_degree_ge:
        return False
    if filt.require_connected and not invariants.is_connected(g):
        return False
    circ = None
    if filt.circumference_eq is not None or filt.hamiltonian_eq is not None:
        circ = circumference(g)
    if filt.circumference_eq is not None and circ != filt.circumference_eq:
        return False
    if filt.hamiltonian_eq is not None and (g.n >= 3 and circ == g.n) != filt.hamiltonian_eq:
        return False
    if filt.matching_eq is not None and matching_number(g) != filt.matching_eq:
        return False
    if filt.require_biconnected and not invariants.is_biconnected(g):
        return False
    if filt.detour_eq is not None and detour_order(g) != filt.detour_eq:
        return False
    return True


def _scan_mask_range(filt: FamilyFilter, lo: int, hi: int):
    """Masks in [lo, hi) whose graph passes the filter.

    Checks are ordered cheapest-first: degrees, connectivity, circumference
    (by cycle-mask containment), then biconnectivity / matching / detour.
    """
    n = filt.n
    pairs = _vertex_pairs(n)
    by_len = _cycle_masks(n) if (filt.circumference_eq is not None
                                 or filt.hamiltonian_eq is not None) else None
    min_deg = filt.min_degree_ge or 0
    if filt.require_biconnected:
        min_deg = max(min_deg, 2)
    need_connected = filt.require_connected or filt.require_biconnected
    full = (1 << n) - 1
    out = []
    for mask in range(lo, hi):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m ^= low
        if min_deg and any(bin(row).count("1") < min_deg for row in adj):
            continue
        if need_connected and n and invariants._reach(adj, 0, full) != full:
            continue
        if by_len is not None:
            circ = _mask_circumference(mask, by_len, n)
            if filt.circumference_eq is not None and circ != filt.circumference_eq:
                continue
            if filt.hamiltonian_eq is not None and \
                    (n >= 3 and circ == n) != filt.hamiltonian_eq:
                continue
        if filt.matching_eq is not None and \
                invariants._matching(adj, full) != filt.matching_eq:
            continue
        g = Graph(n, adj, _validate=False)
        if filt.require_biconnected and not invariants.is_biconnected(g):
            continue
        if filt.detour_eq is not None and detour_order(g) != filt.detour_eq:
            continue
        out.append(mask)
    return out


_FAMILY_CACHE: dict = {}


def scan_family(filt: FamilyFilter):
    """All edge masks of labeled graphs on [filt.n] passing the filter.

    Results are memoized per filter so repeated bound checks over the same
    family pay for one scan.
    """
    if filt not in _FAMILY_CACHE:
        if len(_FAMILY_CACHE) >= 16:
            _FAMILY_CACHE.clear()
        total = 1 << (filt.n * (filt.n - 1) // 2)
        _FAMILY_CACHE[filt] = tuple(_scan_mask_range(filt, 0, total))
    return _FAMILY_CACHE[filt]


# ---------------------------------------------------------------------------
# bound verification

_THEOREM_FILTER_REQUIREMENTS = {
    "T1": ("biconnected", "circumference_eq"),
    "C8": ("biconnected", "circumference_eq"),
    "C14": ("circumference_eq",),
    "T2": ("connected", "detour_eq"),
    "C9": ("connected", "detour_eq"),
    "C17": ("detour_eq",),
    "T3": ("matching_eq",),
    "C10": ("matching_eq",),
}


def _bound_for(theorem_id: str, filt: FamilyFilter, spec: PartSpec) -> int:
    needs = _THEOREM_FILTER_REQUIREMENTS.get(theorem_id)
    if needs is None:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    if "biconnected" in needs and not filt.require_biconnected:
        raise ValueError(f"{theorem_id} needs require_biconnected")
    if "connected" in needs and not (filt.require_connected or filt.require_biconnected):
        raise ValueError(f"{theorem_id} needs require_connected")
    if "circumference_eq" in needs:
        if filt.circumference_eq is None:
            raise ValueError(f"{theorem_id} needs circumference_eq")
        if filt.circumference_eq >= filt.n:
            raise ValueError(f"{theorem_id} covers nonhamiltonian graphs only")
        c = filt.circumference_eq
        if theorem_id == "C14":
            return formula_bound("C14", spec, filt.n, c=c)
        k = 2 if theorem_id == "C8" else filt.min_degree_ge
        if k is None:
            raise ValueError("T1 needs min_degree_ge in the filter")
        return formula_bound("T1", spec, filt.n, c=c, k=k)
    if "detour_eq" in needs:
        if filt.detour_eq is None:
            raise ValueError(f"{theorem_id} needs detour_eq")
        if filt.detour_eq >= filt.n:
            raise ValueError(f"{theorem_id} covers nontraceable graphs only")
        p = filt.detour_eq
        if theorem_id == "C17":
            return formula_bound("C17", spec, filt.n, p=p)
        k = 1 if theorem_id == "C9" else filt.min_degree_ge
        if k is None:
            raise ValueError("T2 needs min_degree_ge in the filter")
        return formula_bound("T2", spec, filt.n, p=p, k=k)
    if filt.matching_eq is None:
        raise ValueError(f"{theorem_id} needs matching_eq")
    a = filt.matching_eq
    if filt.n < 2 * a + 2:
        raise ValueError("matching bounds need n >= 2*alpha' + 2")
    k = 0 if theorem_id == "C10" else filt.min_degree_ge
    if k is None:
        raise ValueError("T3 needs min_degree_ge in the filter")
    return formula_bound("T3", spec, filt.n, alpha_prime=a, k=k)


def _count_over_masks(n: int, masks, spec: PartSpec, cap: int):
    pairs = _vertex_pairs(n)
    best = -1
    at_best = 0
    witnesses = []
    for mask in masks:
        g = _graph_from_mask(n, mask, pairs)
        value = count_copies(g, spec)
        if value > best:
            best, at_best, witnesses = value, 1, [to_graph6(g)]
        elif value == best:
            at_best += 1
            if len(witnesses) < cap:
                witnesses.append(to_graph6(g))
    return best, at_best, witnesses


def _scan_chunk(args):
    filt, spec, lo, hi, cap = args
    masks = _scan_mask_range(filt, lo, hi)
    best, at_best, witnesses = _count_over_masks(filt.n, masks, spec, cap)
    return len(masks), best, at_best, witnesses


def verify_bound(filt: FamilyFilter, spec: PartSpec, theorem_id: str,
                 source=None, jobs: int = 1, witness_cap: int = 16) -> VerificationReport:
    """Scan a graph family and compare the observed copy maximum against
    the published bound.

    source, when given, is an iterable of graph6 lines replacing the
    built-in labeled enumeration (required for n > 8).
    """
    bound_value = _bound_for(theorem_id, filt, spec)
    if source is not None:
        scanned = 0
        best = -1
        at_best = 0
        witnesses = []
        for g in stream_graph6(source):
            if not _passes_graph(g, filt):
                continue
            scanned += 1
            value = count_copies(g, spec)
            if value > best:
                best, at_best, witnesses = value, 1, [to_graph6(g)]
            elif value == best:
                at_best += 1
                if len(witnesses) < witness_cap:
                    witnesses.append(to_graph6(g))
    elif jobs > 1:
        total = 1 << (filt.n * (filt.n - 1) // 2)
        chunks = max(1, jobs * 4)
        step = -(-total // chunks)
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        work = [(filt, spec, lo, hi, witness_cap) for lo, hi in ranges]
        scanned = 0
        best = -1
        at_best = 0
        witnesses = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_scanned, part_best, part_count, part_wit in pool.map(_scan_chunk, work):
                scanned += part_scanned
                if part_best > best:
                    best, at_best, witnesses = part_best, part_count, list(part_wit)
                elif part_best == best and best >= 0:
                    at_best += part_count
                    witnesses.extend(part_wit)
        witnesses = witnesses[:witness_cap]
    else:
        masks = scan_family(filt)
        scanned = len(masks)
        best, at_best, witnesses = _count_over_masks(filt.n, masks, spec, witness_cap)
    empty = scanned == 0
    observed = 0 if empty else best
    return VerificationReport(
        filter=filt, spec=spec, theorem_id=theorem_id,
        bound=bound_value, observed_max=observed,
        witnesses=tuple(witnesses), witness_total=0 if empty else at_best,
        graphs_scanned=scanned, empty_family=empty,
        passed=empty or observed <= bound_value,
        tight=(not empty) and observed == bound_value,
    )


# ---------------------------------------------------------------------------
# lemma checks

def check_lemma(lemma_id: str, specs=DEFAULT_SPECS, **grid) -> LemmaReport:
    """Exhaustively test one of the auxiliary counting lemmas on its grid.

    Violations are report content, not errors; an empty violation list is
    the expected outcome.
    """
    if lemma_id not in LEMMA_IDS:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    checker = {
        "L6": _check_l6, "L7": _check_l7, "L11": _check_l11, "L12": _check_l12,
        "L13": _check_l13, "L15": _check_l15, "L16": _check_l16,
    }[lemma_id]
    points, violations = checker(specs, **grid)
    return LemmaReport(lemma_id=lemma_id, points_checked=points,
                       violations=tuple(violations))


def _check_l6(specs, max_n: int = 6):
    """Path-endpoint degree bound on the circumference, all 2-connected
    graphs up to max_n, every simple path."""
    points = 0
    violations = []
    for n in range(3, max_n + 1):
        pairs = _vertex_pairs(n)
        for mask in range(1 << len(pairs)):
            g = _graph_from_mask(n, mask, pairs)
            if not invariants.is_biconnected(g):
                continue
            circ = circumference(g)
            adj = g.adj
            bad = []

            def walk(start, v, used, length):
                # length = edge count of the path so far; only paths with
                # more than circ vertices can violate the bound
                if length + 1 > circ:
                    dx = bin(adj[start] & used).count("1")
                    dy = bin(adj[v] & used).count("1")
                    if min(length + 1, dx + dy) > circ:
                        bad.append((start, v, length))
                for u in bits(adj[v] & ~used):
                    walk(start, u, used | 1 << u, length + 1)

            for start in range(n):
                walk(start, start, 1 << start, 0)
            points += 1
            if bad:
                violations.append((to_graph6(g), bad[0]))
    return points, violations


def _check_l7(specs, max_n: int = 6, ks=(1, 2)):
    """Closure preserves the matching bound, in contrapositive form."""
    points = 0
    violations = []
    for n in range(1, max_n + 1):
        pairs = _vertex_pairs(n)
        for mask in range(1 << len(pairs)):
            g = _graph_from_mask(n, mask, pairs)
            am = matching_number(g)
            for k in ks:
                if am > k:
                    continue
                points += 1
                if matching_number(closure(g, 2 * k + 1)) > k:
                    violations.append((to_graph6(g), k))
    return points, violations


def _check_l11(specs, max_t: int = 6):
    """Copies through an independent vertex dominate copies through the
    clique-pair vertex once the independent pair is removed."""
    points = 0
    violations = []
    for t in range(1, max_t + 1):
        g = join(complete(t), disjoint_union(complete(2), empty_graph(2)))
        x = t + 1  # second vertex of the K_2 block
        a = t + 3  # second vertex of the independent pair
        reduced = g.delete_vertices([t + 2, t + 3])
        for spec in specs:
            if spec.s == spec.r:
                continue  # lemma excludes complete templates
            points += 1
            lhs = count_copies_through(reduced, spec, x)
            rhs = count_copies_through(g, spec, a)
            if lhs > rhs:
                violations.append((t, str(spec), lhs, rhs))
    return points, violations


def _check_l12(specs, max_c: int = 9):
    """Two cliques through a cut vertex vs. the merged configurations."""
    points = 0
    violations = []
    for c in range(1, max_c + 1):
        for b in range(1, c + 1):
            for a in range(1, b + 1):
                lhs_graph = join(complete(1),
                                 disjoint_union(complete(a - 1), complete(b - 1)))
                for spec in specs:
                    points += 1
                    lhs = count_copies(lhs_graph, spec)
                    if a + b <= c + 1:
                        rhs = count_copies_complete(a + b - 1, spec)
                    else:
                        rhs_graph = join(complete(1),
                                         disjoint_union(complete(c - 1),
                                                        complete(a + b - c - 1)))
                        rhs = count_copies(rhs_graph, spec)
                    if lhs > rhs:
                        violations.append((a, b, c, str(spec), lhs, rhs))
    return points, violations


def _two_block_graph(n1: int, n2: int, c: int, t: int) -> Graph:
    """Two (n_i, c, t) family members sharing one dominating hub vertex."""
    b1 = join(complete(t), disjoint_union(complete(c + 1 - 2 * t),
                                          empty_graph(n1 - c - 1 + t)))
    b2 = join(complete(t), disjoint_union(complete(c + 1 - 2 * t),
                                          empty_graph(n2 - c - 1 + t)))
    # glue vertex 0 of b2 (a hub, dominating in its block) onto vertex 0 of b1
    n = n1 + n2 - 1
    adj = list(b1.adj) + [0] * (n2 - 1)
    for v in range(1, n2):
        shifted = 0
        for u in bits(b2.adj[v]):
            shifted |= 1 << (u + n1 - 1 if u else 0)
        adj[v + n1 - 1] = shifted
        if b2.adj[v] & 1:
            adj[0] |= 1 << (v + n1 - 1)
    return Graph(n, adj)


def _check_l13(specs, max_n: int = 12, cs=(4, 5, 6)):
    """Two glued blocks never beat the single family member of the same order."""
    points = 0
    violations = []
    for c in cs:
        t = c // 2
        for n in range(2 * c + 1, max_n + 1):
            for n1 in range(c + 1, n - c + 1):
                n2 = n - n1 + 1
                if n2 - 1 < c:
                    continue
                glued = _two_block_graph(n1, n2, c, t)
                for spec in specs:
                    if spec.s == spec.r:
                        # complete templates genuinely beat the single block
                        # (two glued K_4-cores hold more triangles than one
                        # family member); the circumference bound covers them
                        # through its chain-of-cliques branch instead
                        continue
                    points += 1
                    lhs = count_copies(glued, spec)
                    rhs = g_formula_sum(n, c, t, spec)
                    if lhs > rhs:
                        violations.append((n, n1, c, str(spec), lhs, rhs))
    return points, violations


def _check_l15(specs, max_p: int = 9):
    """Clique-merge bound for copy counts in complete graphs."""
    points = 0
    violations = []
    for p in range(1, max_p + 1):
        for b in range(1, p):
            for a in range(1, b + 1):
                for spec in specs:
                    points += 1
                    lhs = (count_copies_complete(a, spec)
                           + count_copies_complete(b, spec))
                    if a + b <= p:
                        rhs = count_copies_complete(a + b, spec)
                    else:
                        rhs = (count_copies_complete(p - 1, spec)
                               + count_copies_complete(a + b - p + 1, spec))
                    if lhs > rhs:
                        violations.append((a, b, p, str(spec), lhs, rhs))
    return points, violations


def _check_l16(specs, max_n: int = 12, ps=(4, 5, 6, 7, 8)):
    """Superadditivity of the family copy count in the order."""
    points = 0
    violations = []
    for p in ps:
        t = (p - 1) // 2
        for n1 in range(p, max_n + 1):
            for n2 in range(p, max_n + 1):
                for spec in specs:
                    if spec.s == spec.r:
                        # complete templates break superadditivity at p = 4:
                        # the family's clique count is constant in the order,
                        # so two small members beat one large one; the detour
                        # bound covers them through its disjoint-cliques branch
                        continue
                    points += 1
                    lhs = (g_formula_sum(n1, p - 1, t, spec)
                           + g_formula_sum(n2, p - 1, t, spec))
                    rhs = g_formula_sum(n1 + n2, p - 1, t, spec)
                    if lhs > rhs:
                        violations.append((n1, n2, p, str(spec), lhs, rhs))
    return points, violations
