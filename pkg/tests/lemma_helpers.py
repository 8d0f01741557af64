"""Checkers and generators for the deletion-coincidence properties.

Each check_* function returns a list of violations (empty = the property
held on everything examined). The exhaustive variants sweep all graphs on
[n] using the vectorised deletion tables; the randomized variants work on
(G, H) pairs supplied by the planted generators below, which build pairs
with guaranteed deletion agreements (insert two vertices into a shared
core) and graphs with large homogeneous blocks (so the conditional
properties actually fire).
"""

from __future__ import annotations

import random
from itertools import combinations

from ordshadow.blocks import (excess, homogeneous_blocks, interval_in_one_block,
                              semi_homogeneous_witness, type_of)
from ordshadow.graphs import OrderedGraph, pair_count, pair_index
from ordshadow.tables import deletion_columns


# -- generators --------------------------------------------------------------

def random_graph(rng: random.Random, n: int) -> OrderedGraph:
    return OrderedGraph(n, rng.getrandbits(pair_count(n)))


def random_blocky(rng: random.Random, n: int) -> OrderedGraph:
    """A graph assembled from interval blocks with all-or-nothing relations;
    adjacent blocks may merge, which only makes the blocks larger."""
    sizes = []
    left = n
    while left > 0:
        s = min(left, rng.choice((1, 1, 2, 2, 3, 3, 4)))
        sizes.append(s)
        left -= s
    starts = []
    pos = 1
    for s in sizes:
        starts.append(pos)
        pos += s
    edges = []
    k = len(sizes)
    for i in range(k):
        lo_i, hi_i = starts[i], starts[i] + sizes[i] - 1
        if sizes[i] >= 2 and rng.random() < 0.5:
            edges.extend((u, v) for u in range(lo_i, hi_i + 1)
                         for v in range(u + 1, hi_i + 1))
        for j in range(i + 1, k):
            if rng.random() < 0.5:
                lo_j, hi_j = starts[j], starts[j] + sizes[j] - 1
                edges.extend((u, v) for u in range(lo_i, hi_i + 1)
                             for v in range(lo_j, hi_j + 1))
    return OrderedGraph.from_edges(n, edges)


def insert_vertex(core: OrderedGraph, pos: int, adjacency_bits: int) -> OrderedGraph:
    """Inverse of deletion: a new vertex at position pos (1-based), adjacent
    to old vertex u iff bit u-1 of adjacency_bits is set."""
    n = core.n + 1
    edges = [(i + (i >= pos), j + (j >= pos)) for i, j in core.edge_list()]
    for u in range(1, core.n + 1):
        if adjacency_bits >> (u - 1) & 1:
            v = u + (u >= pos)
            edges.append((min(pos, v), max(pos, v)))
    return OrderedGraph.from_edges(n, edges)


def planted_pair(rng: random.Random, n: int) -> tuple[OrderedGraph, OrderedGraph]:
    """(G, H) on [n] with at least one deletion agreement by construction."""
    core = random_graph(rng, n - 1)
    a = rng.randint(1, n)
    b = rng.randint(1, n)
    G = insert_vertex(core, a, rng.getrandbits(n - 1))
    H = insert_vertex(core, b, rng.getrandbits(n - 1))
    return G, H


def agreements_direct(G: OrderedGraph, H: OrderedGraph) -> list[tuple[int, int]]:
    """All (a, b) with G - a = H - b, by direct recomputation."""
    dg = [G.delete(v) for v in range(1, G.n + 1)]
    dh = [H.delete(v) for v in range(1, H.n + 1)]
    return [(a + 1, b + 1) for a in range(G.n) for b in range(H.n) if dg[a] == dh[b]]


def agreement_pairs_exhaustive(n: int) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """(g_mask, h_mask) -> all agreements (a, b), over every ordered pair of
    graphs on [n] with at least one agreement, via deletion-key indexing."""
    cols = deletion_columns(n)
    buckets: dict[int, list[tuple[int, int]]] = {}
    for g in range(1 << pair_count(n)):
        for v0 in range(n):
            buckets.setdefault(int(cols[g, v0]), []).append((g, v0 + 1))
    pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for entries in buckets.values():
        for g, a in entries:
            for h, b in entries:
                pairs.setdefault((g, h), []).append((a, b))
    return pairs


# -- single-graph properties -------------------------------------------------

def check_three_equal_deletions(G: OrderedGraph) -> list:
    """Three equal deletions G-a = G-b = G-c force [a, c] into one block."""
    viol = []
    dels = [G.delete(v) for v in range(1, G.n + 1)]
    for a, b, c in combinations(range(1, G.n + 1), 3):
        if dels[a - 1] == dels[b - 1] == dels[c - 1]:
            if not interval_in_one_block(G, a, c):
                viol.append((G.literal(), a, b, c))
    return viol


def check_equal_deletions_semi(G: OrderedGraph) -> list:
    """G-a = G-b forces [a, b] to be semi-homogeneous."""
    viol = []
    dels = [G.delete(v) for v in range(1, G.n + 1)]
    for a, b in combinations(range(1, G.n + 1), 2):
        if dels[a - 1] == dels[b - 1]:
            if semi_homogeneous_witness(G, a, b) is None:
                viol.append((G.literal(), a, b))
    return viol


def check_small_block_typechange(G: OrderedGraph) -> list:
    """Deleting from a block of size <= 2 must change the type."""
    viol = []
    t = type_of(G)
    for lo, hi in homogeneous_blocks(G):
        if hi - lo + 1 <= 2:
            for v in range(lo, hi + 1):
                if G.n >= 2 and type_of(G.delete(v)) == t:
                    viol.append((G.literal(), v))
    return viol


def check_restricted_shadow_bound(G: OrderedGraph, subset_mask: int) -> list:
    """2 |{G - a : a in A}| >= |A| - excess(G)."""
    dels = {G.delete(v) for v in range(1, G.n + 1) if subset_mask >> (v - 1) & 1}
    size = subset_mask.bit_count()
    if 2 * len(dels) < size - excess(G):
        return [(G.literal(), subset_mask)]
    return []


def check_low_excess_shadow(G: OrderedGraph, rs=(1, 2, 3)) -> list:
    """|{H in shadow : m(H) <= m(G) + 2r + 1}| >= ((r-1) n - r m(G)) / (2r)."""
    viol = []
    m = excess(G)
    shadow = {G.delete(v) for v in range(1, G.n + 1)}
    for r in rs:
        count = sum(1 for h in shadow if excess(h) <= m + 2 * r + 1)
        if 2 * r * count < (r - 1) * G.n - r * m:
            viol.append((G.literal(), r))
    return viol


# -- pair properties ---------------------------------------------------------

def _edge_fully_outside(sym_mask: int, n: int, a: int, b: int) -> bool:
    for j in range(2, n + 1):
        for i in range(1, j):
            if sym_mask >> pair_index(i, j) & 1 and not (a <= i <= b or a <= j <= b):
                return True
    return False


def check_agreement_edge_interval(g: int, h: int, n: int,
                                  ag: list[tuple[int, int]]) -> list:
    """G-a = H-b with a <= b keeps every edge of the symmetric difference
    pinned to an endpoint in [a, b]."""
    sym = g ^ h
    if sym == 0:
        return []
    viol = []
    for a, b in ag:
        if a <= b and _edge_fully_outside(sym, n, a, b):
            viol.append((g, h, a, b))
    return viol


def max_disjoint_intervals(intervals: list[tuple[int, int]]) -> int:
    count = 0
    last_end = 0
    for a, b in sorted(intervals, key=lambda ab: (ab[1], ab[0])):
        if a > last_end:
            count += 1
            last_end = b
    return count


def check_three_disjoint_agreements(g: int, h: int,
                                    ag: list[tuple[int, int]]) -> list:
    """Three disjoint agreement intervals [a_i, b_i] force G = H."""
    if g == h:
        return []
    ordered = [(a, b) for a, b in ag if a <= b]
    if max_disjoint_intervals(ordered) >= 3:
        return [(g, h)]
    return []


def _has_distinct_representatives(bsets: list[list[int]]) -> bool:
    def rec(i: int, used: frozenset) -> bool:
        if i == len(bsets):
            return True
        return any(b not in used and rec(i + 1, used | {b}) for b in bsets[i])

    return rec(0, frozenset())


def check_four_left_agreements(g: int, h: int, n: int,
                               ag: list[tuple[int, int]]) -> list:
    """Agreements at a1 < a2 < a3 < a4 with four distinct partners all
    >= a4 force [a2, a3] into one block of G."""
    by_a: dict[int, set[int]] = {}
    for a, b in ag:
        by_a.setdefault(a, set()).add(b)
    viol = []
    avals = sorted(by_a)
    G = None
    for quad in combinations(avals, 4):
        a4 = quad[3]
        bsets = [sorted(x for x in by_a[q] if x >= a4) for q in quad]
        if any(not s for s in bsets):
            continue
        if not _has_distinct_representatives(bsets):
            continue
        if G is None:
            G = OrderedGraph(n, g)
        if not interval_in_one_block(G, quad[1], quad[2]):
            viol.append((g, h, quad))
    return viol


# -- exhaustive sweeps -------------------------------------------------------

def sweep_single_graph_checks(n: int, rs=(1, 2, 3)) -> dict[str, list]:
    """Run all per-graph checks over every graph on [n]."""
    out = {"three-equal-deletions": [], "equal-deletions-semi": [],
           "small-block-typechange": [], "restricted-shadow": [],
           "low-excess-shadow": []}
    for mask in range(1 << pair_count(n)):
        G = OrderedGraph(n, mask)
        out["three-equal-deletions"].extend(check_three_equal_deletions(G))
        out["equal-deletions-semi"].extend(check_equal_deletions_semi(G))
        out["small-block-typechange"].extend(check_small_block_typechange(G))
        for subset in range(1 << n):
            out["restricted-shadow"].extend(check_restricted_shadow_bound(G, subset))
        out["low-excess-shadow"].extend(check_low_excess_shadow(G, rs))
    return out


def sweep_pair_checks(n: int) -> dict[str, list]:
    """Run all pair checks over every agreeing ordered pair on [n]."""
    pairs = agreement_pairs_exhaustive(n)
    out = {"agreement-edge-interval": [], "three-disjoint-agreements": [],
           "four-left-agreements": []}
    for (g, h), ag in pairs.items():
        out["agreement-edge-interval"].extend(
            check_agreement_edge_interval(g, h, n, ag))
        out["three-disjoint-agreements"].extend(
            check_three_disjoint_agreements(g, h, ag))
        out["four-left-agreements"].extend(
            check_four_left_agreements(g, h, n, ag))
    return out


def random_pair_checks(n: int, trials: int, seed: int) -> dict[str, list]:
    """Seeded random pair checks: planted shared-core pairs plus blocky
    self-pairs, all agreements recomputed directly."""
    out = {"agreement-edge-interval": [], "three-disjoint-agreements": [],
           "four-left-agreements": []}
    rng = random.Random(seed)
    for i in range(trials):
        if i % 2 == 0:
            G, H = planted_pair(rng, n)
        else:
            G = random_blocky(rng, n)
            H = G if rng.random() < 0.5 else random_blocky(rng, n)
        ag = agreements_direct(G, H)
        out["agreement-edge-interval"].extend(
            check_agreement_edge_interval(G.edges, H.edges, n, ag))
        out["three-disjoint-agreements"].extend(
            check_three_disjoint_agreements(G.edges, H.edges, ag))
        out["four-left-agreements"].extend(
            check_four_left_agreements(G.edges, H.edges, n, ag))
    return out


def random_single_graph_checks(n: int, trials: int, seed: int,
                               rs=(1, 2, 3)) -> dict[str, list]:
    out = {"three-equal-deletions": [], "equal-deletions-semi": [],
           "small-block-typechange": [], "restricted-shadow": [],
           "low-excess-shadow": []}
    rng = random.Random(seed)
    for i in range(trials):
        G = random_blocky(rng, n) if i % 2 == 0 else random_graph(rng, n)
        out["three-equal-deletions"].extend(check_three_equal_deletions(G))
        out["equal-deletions-semi"].extend(check_equal_deletions_semi(G))
        out["small-block-typechange"].extend(check_small_block_typechange(G))
        out["restricted-shadow"].extend(
            check_restricted_shadow_bound(G, rng.getrandbits(n)))
        out["low-excess-shadow"].extend(check_low_excess_shadow(G, rs))
    return out
