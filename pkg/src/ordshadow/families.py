"""Named families of ordered graphs.

Two kinds of family live here. The sharpness families G1 and G2 witness that
the small-family shadow bound cannot be improved: G1 holds the n prefix
cliques on [n] (shadow of size n-1), G2 the n-1 single consecutive edges
(shadow of the same size as the family). The remaining builders are the
level sets of the named hereditary properties used by the speed engine: the
six linear-speed families, the independent-consecutive-edge family with
Fibonacci counts, its truncations, the disjoint-interval-edge variant, and
the two-consecutive-edge seeds whose closure pins the linear-speed offset.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidInput
from .graphs import GraphFamily, OrderedGraph


def prefix_clique(n: int, k: int) -> OrderedGraph:
    """Edges {ij : i < j <= k}; k = 1 (or 0) gives the empty graph."""
    return OrderedGraph.from_edges(n, [(i, j) for j in range(2, k + 1) for i in range(1, j)])


def g1(n: int) -> GraphFamily:
    """The n prefix cliques on [n]."""
    if n < 1:
        raise InvalidInput("G1 needs n >= 1")
    return GraphFamily.from_graphs(n, (prefix_clique(n, k) for k in range(1, n + 1)))


def g2(n: int) -> GraphFamily:
    """The n-1 single consecutive edges k(k+1) on [n]."""
    if n < 1:
        raise InvalidInput("G2 needs n >= 1")
    return GraphFamily.from_graphs(
        n, (OrderedGraph.from_edges(n, [(k, k + 1)]) for k in range(1, n)))


# -- the six linear-speed property levels -----------------------------------
#
# Each level set has exactly n members on [n]: the empty graph plus one graph
# per parameter value, with parameter ranges fixed so that degenerate values
# collapse onto the empty graph rather than adding a member.

def _six_edges(variant: int, n: int, k: int) -> list[tuple[int, int]]:
    if variant == 1:    # prefix clique
        return [(i, j) for j in range(2, k + 1) for i in range(1, j)]
    if variant == 2:    # complete split pair
        return [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)]
    if variant == 3:    # single edge from the left end
        return [(1, k)] if k >= 2 else []
    if variant == 4:    # single consecutive edge
        return [(k, k + 1)] if k + 1 <= n else []
    if variant == 5:    # star over a prefix
        return [(1, j) for j in range(2, k + 1)]
    if variant == 6:    # star over a suffix
        return [(1, j) for j in range(k + 1, n + 1)] if k >= 1 else []
    raise InvalidInput(f"six-family variant {variant} outside 1..6")


def six_family_level(variant: int, n: int) -> GraphFamily:
    """Level n of the named linear-speed property; always n members."""
    if not (1 <= variant <= 6):
        raise InvalidInput(f"six-family variant {variant} outside 1..6")
    if n < 1:
        raise InvalidInput("six-family level needs n >= 1")
    graphs = [OrderedGraph.empty(n)]
    for k in range(1, n + 1):
        graphs.append(OrderedGraph.from_edges(n, _six_edges(variant, n, k)))
    return GraphFamily.from_graphs(n, graphs)


# -- independent consecutive edges ------------------------------------------

def _spaced_position_sets(n: int, max_count: int | None):
    """Subsets of {1..n-1} with pairwise gaps >= 2, optionally size-capped."""

    def rec(prefix: tuple[int, ...], nxt: int):
        yield prefix
        if max_count is not None and len(prefix) >= max_count:
            return
        for i in range(nxt, n):
            yield from rec(prefix + (i,), i + 2)

    yield from rec((), 1)


def fibonacci_level(n: int) -> GraphFamily:
    """Graphs on [n] whose edges are pairwise non-adjacent consecutive pairs.

    Counting these by the leftmost edge gives the recurrence s(n) =
    s(n-1) + s(n-2); the enumeration pins the offsets to s(1) = 1, s(2) = 2.
    """
    if n < 1:
        raise InvalidInput("level needs n >= 1")
    return GraphFamily.from_graphs(
        n, (OrderedGraph.from_edges(n, [(i, i + 1) for i in s])
            for s in _spaced_position_sets(n, None)))


def fibonacci_complement_level(n: int) -> GraphFamily:
    return GraphFamily.from_graphs(n, (g.complement() for g in fibonacci_level(n)))


def qk_consecutive_level(k: int, n: int) -> GraphFamily:
    """At most k pairwise non-adjacent consecutive edges; speed
    sum_{i=0}^{k} C(n-i, i)."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    if n < 1:
        raise InvalidInput("level needs n >= 1")
    return GraphFamily.from_graphs(
        n, (OrderedGraph.from_edges(n, [(i, i + 1) for i in s])
            for s in _spaced_position_sets(n, k)))


def qk_nested_level(k: int, n: int) -> GraphFamily:
    """At most k edges i1j1, ..., itjt with i1 < j1 < i2 < j2 < ... < it < jt
    (each edge entirely to the left of the next); speed sum_t C(n, 2t)."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    if n < 1:
        raise InvalidInput("level needs n >= 1")
    graphs = []
    for t in range(k + 1):
        for verts in combinations(range(1, n + 1), 2 * t):
            graphs.append(OrderedGraph.from_edges(
                n, [(verts[2 * i], verts[2 * i + 1]) for i in range(t)]))
    return GraphFamily.from_graphs(n, graphs)


def q2_sharpness_family(n: int) -> GraphFamily:
    """The k = 2 consecutive-edge level minus the empty graph: C(n-2,2)+n-1
    members whose shadow has C(n-3,2)+n-1."""
    if n < 2:
        raise InvalidInput("sharpness family needs n >= 2")
    return GraphFamily.from_graphs(
        n, (g for g in qk_consecutive_level(2, n) if g.edges != 0))


def two_edge_seed_family(k: int, n: int) -> GraphFamily:
    """Graphs with edge set {i(i+1), j(j+1)}, i <= k-1 and i+1 < j; the
    generators whose hereditary closure has speed kn - (k-1)(k+4)/2."""
    if k < 1:
        raise InvalidInput("k must be positive")
    if n < 1:
        raise InvalidInput("level needs n >= 1")
    graphs = []
    for i in range(1, min(k - 1, n - 1) + 1):
        for j in range(i + 2, n):
            graphs.append(OrderedGraph.from_edges(n, [(i, i + 1), (j, j + 1)]))
    return GraphFamily.from_graphs(n, graphs)


_NEEDS_K = {"qk-consecutive", "qk-nested", "fk-seeds"}


def named_family(name: str, n: int, k: int | None = None) -> GraphFamily:
    """Dispatch by family name; see the module docstring for the roster."""
    name = name.strip()
    if name in _NEEDS_K and k is None:
        raise InvalidInput(f"family {name!r} needs the parameter k")
    if name == "G1":
        return g1(n)
    if name == "G2":
        return g2(n)
    if name.startswith("six-family-"):
        try:
            variant = int(name.removeprefix("six-family-"))
        except ValueError:
            raise InvalidInput(f"unknown family {name!r}") from None
        return six_family_level(variant, n)
    if name == "fibonacci":
        return fibonacci_level(n)
    if name == "fibonacci-complement":
        return fibonacci_complement_level(n)
    if name == "qk-consecutive":
        return qk_consecutive_level(k, n)
    if name == "qk-nested":
        return qk_nested_level(k, n)
    if name == "q2-sharpness":
        return q2_sharpness_family(n)
    if name == "fk-seeds":
        return two_edge_seed_family(k, n)
    raise InvalidInput(f"unknown family {name!r}")


FAMILY_NAMES = ("G1", "G2", "six-family-1", "six-family-2", "six-family-3",
                "six-family-4", "six-family-5", "six-family-6", "fibonacci",
                "fibonacci-complement", "qk-consecutive", "qk-nested",
                "q2-sharpness", "fk-seeds")
