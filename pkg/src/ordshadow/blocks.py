"""Homogeneous blocks, types, excess, and lines inside a type class.

Two vertices x, y of an ordered graph are equivalent when they see the same
thing elsewhere: Gamma(x) \\ {y} = Gamma(y) \\ {x}. A homogeneous block is a
maximal run of consecutive, pairwise-equivalent vertices; the runs partition
[n] uniquely. Collapsing each block to a point gives a loop-allowing quotient
graph H on the blocks (the loop on a block records whether its internal pairs
are edges; blocks of size >= 3 are forced to be cliques or independent sets,
and singleton blocks never carry a loop). The *type* of a graph is the pair
(H, b) where b marks each block as singleton (1) or larger (2).

Graphs on [n] of one type differ only in how the n - #singletons - 2*#large
surplus vertices are distributed over the large blocks. Recording, for each
block of size >= 2, its size minus two therefore identifies the type class on
[n] with the set of nonnegative d-vectors of fixed coordinate sum m (the
*excess* of the type on [n]); that identification is `phi`, and `realize` is
its inverse. A line in a type class is a subset whose phi-image is a full
two-coordinate slice of that simplex lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidInput, UnrealizableType
from .graphs import GraphFamily, OrderedGraph, pair_index


def equivalent(G: OrderedGraph, x: int, y: int) -> bool:
    """Whether Gamma(x) \\ {y} = Gamma(y) \\ {x}."""
    rows = G.adjacency_rows()
    return (rows[x - 1] & ~(1 << (y - 1))) == (rows[y - 1] & ~(1 << (x - 1)))


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    """Ordered list of [start, end] intervals (1-based, inclusive) covering [n]."""

    blocks: tuple[tuple[int, int], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_index_of(self, v: int) -> int:
        for i, (a, b) in enumerate(self.blocks):
            if a <= v <= b:
                return i
        raise InvalidInput(f"vertex {v} outside the decomposed range")

    def __str__(self) -> str:
        return "".join(f"[{a},{b}]" for a, b in self.blocks)


def homogeneous_blocks(G: OrderedGraph) -> BlockDecomposition:
    """The unique decomposition of [n] into maximal consecutive equivalent runs."""
    if G.n < 1:
        raise InvalidInput("the 0-vertex graph has no block decomposition")
    rows = G.adjacency_rows()
    blocks = []
    start = 1
    for v in range(1, G.n):
        # consecutive vertices v, v+1 stay in one run iff they are equivalent
        if (rows[v - 1] & ~(1 << v)) != (rows[v] & ~(1 << (v - 1))):
            blocks.append((start, v))
            start = v + 1
    blocks.append((start, G.n))
    return BlockDecomposition(tuple(blocks))


def _h_bit(k: int, i: int, j: int) -> int:
    # row-major upper triangle with diagonal, 1 <= i <= j <= k
    return (i - 1) * k - (i - 1) * (i - 2) // 2 + (j - i)


@dataclass(frozen=True, slots=True)
class GraphType:
    """The pair (H, b): quotient loop-graph bits plus the size-class vector.

    h packs the k(k+1)/2 upper-triangle-with-diagonal adjacencies of H in
    row-major order; b packs one bit per block, set iff the block has size
    at least two. Both encodings are fixed so types hash and compare
    deterministically.
    """

    k: int
    h: int
    b: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInput("a type needs at least one block")
        if not (0 <= self.h < (1 << (self.k * (self.k + 1) // 2))):
            raise InvalidInput("H bitmask out of range")
        if not (0 <= self.b < (1 << self.k)):
            raise InvalidInput("b bitmask out of range")

    def cross(self, i: int, j: int) -> bool:
        """Whether all pairs between blocks i and j (or inside block i if i == j) are edges."""
        if i > j:
            i, j = j, i
        if not (1 <= i <= j <= self.k):
            raise InvalidInput(f"block pair ({i},{j}) outside [{self.k}]")
        return bool(self.h >> _h_bit(self.k, i, j) & 1)

    def loop(self, i: int) -> bool:
        return self.cross(i, i)

    def b_value(self, i: int) -> int:
        if not (1 <= i <= self.k):
            raise InvalidInput(f"block {i} outside [{self.k}]")
        return 2 if self.b >> (i - 1) & 1 else 1

    @property
    def d(self) -> int:
        """Number of blocks of size at least two."""
        return self.b.bit_count()

    def literal(self) -> str:
        bits = "".join("1" if self.b >> i & 1 else "0" for i in range(self.k))
        return f"k={self.k};H={self.h:x};b={bits}"

    def __str__(self) -> str:
        return self.literal()


def type_of(G: OrderedGraph) -> GraphType:
    """The type of G, computed from its block decomposition."""
    dec = homogeneous_blocks(G)
    k = len(dec)
    h = 0
    b = 0
    blocks = dec.blocks
    for i, (a1, b1) in enumerate(blocks, start=1):
        if b1 > a1:
            b |= 1 << (i - 1)
            # within a block every pair agrees, so one probe decides the loop
            if G.edges >> pair_index(a1, a1 + 1) & 1:
                h |= 1 << _h_bit(k, i, i)
        for j in range(i + 1, k + 1):
            a2 = blocks[j - 1][0]
            if G.edges >> pair_index(a1, a2) & 1:
                h |= 1 << _h_bit(k, i, j)
    return GraphType(k, h, b)


def excess(G: OrderedGraph) -> int:
    """Sum over blocks of size >= 3 of (size - 2); zero when all blocks are small."""
    return sum(s - 2 for s in homogeneous_blocks(G).sizes() if s >= 3)


def type_excess(T: GraphType, n: int) -> int:
    """The common excess of the n-vertex graphs of type T.

    Every singleton block holds exactly one vertex and every large block at
    least two, so the excess is n - #singletons - 2*#large. Raises when no
    graph on [n] can have type T.
    """
    m = n - (T.k - T.d) - 2 * T.d
    if m < 0:
        raise UnrealizableType(f"type {T} needs at least {T.k + T.d} vertices, got {n}")
    if T.d == 0 and m > 0:
        raise UnrealizableType(f"type {T} has no block that can absorb {m} extra vertices")
    return m


def phi(G: OrderedGraph) -> tuple[int, ...]:
    """(size - 2) over the blocks of size >= 2, left to right."""
    return tuple(s - 2 for s in homogeneous_blocks(G).sizes() if s >= 2)


def realize(T: GraphType, x: Iterable[int], n: int) -> OrderedGraph:
    """The unique graph on [n] with type T and phi-vector x.

    Raises UnrealizableType when T is not a genuine type on [n] (for example
    a loop on a singleton block, or adjacent blocks that would merge).
    """
    x = tuple(x)
    m = type_excess(T, n)
    if len(x) != T.d:
        raise UnrealizableType(f"phi-vector has {len(x)} coordinates, type has {T.d} large blocks")
    if any(c < 0 for c in x) or sum(x) != m:
        raise UnrealizableType(f"phi-vector {x} not a nonnegative vector of sum {m}")
    sizes = []
    it = iter(x)
    for i in range(1, T.k + 1):
        sizes.append(1 if T.b_value(i) == 1 else 2 + next(it))

    starts = []
    pos = 1
    for s in sizes:
        starts.append(pos)
        pos += s
    mask = 0
    for i in range(T.k):
        lo_i, hi_i = starts[i], starts[i] + sizes[i] - 1
        if sizes[i] >= 2 and T.loop(i + 1):
            for u in range(lo_i, hi_i + 1):
                for v in range(u + 1, hi_i + 1):
                    mask |= 1 << pair_index(u, v)
        for j in range(i + 1, T.k):
            if T.cross(i + 1, j + 1):
                lo_j, hi_j = starts[j], starts[j] + sizes[j] - 1
                for u in range(lo_i, hi_i + 1):
                    for v in range(lo_j, hi_j + 1):
                        mask |= 1 << pair_index(u, v)
    G = OrderedGraph(n, mask)
    if type_of(G) != T:
        raise UnrealizableType(f"type {T} is not realizable on [{n}]: blocks merge or split")
    return G


def group_by_type(F: GraphFamily) -> dict[GraphType, GraphFamily]:
    """Partition a family into its type classes."""
    buckets: dict[GraphType, list[OrderedGraph]] = {}
    for g in F:
        buckets.setdefault(type_of(g), []).append(g)
    return {t: GraphFamily.from_graphs(F.n, gs) for t, gs in buckets.items()}


def type_preserving_shadow(F: GraphFamily) -> GraphFamily:
    """The part of the shadow that keeps the type of its parent.

    A deleted vertex from a block of size <= 2 always changes the type, so
    only deletions inside large blocks contribute.
    """
    if F.n <= 1:
        raise InvalidInput("type-preserving shadow needs at least 2 vertices")
    out = []
    for g in F:
        t = type_of(g)
        for v in range(1, g.n + 1):
            h = g.delete(v)
            if type_of(h) == t:
                out.append(h)
    return GraphFamily.from_graphs(F.n - 1, out)


def contains_line(F: GraphFamily) -> Optional[GraphFamily]:
    """A line inside a single-type family, if there is one.

    All members must share a type T; with m the excess of T on [n], a line is
    a set of m+1 members whose phi-image is a full two-coordinate slice of
    the phi lattice. Coordinate pairs are scanned in lexicographic order and
    the first full line found is returned. A single point counts as a
    (degenerate) line exactly when m = 0.
    """
    if len(F) == 0:
        return None
    types = {type_of(g) for g in F}
    if len(types) != 1:
        raise InvalidInput(f"family mixes {len(types)} types; a line lives inside one type class")
    T = types.pop()
    m = type_excess(T, F.n)
    if m == 0:
        # the whole class is the single zero vector; any member is a line
        return GraphFamily.from_graphs(F.n, [F.members[0]])
    d = T.d
    if d < 2:
        return None
    image = {phi(g): g for g in F}
    for j in range(d):
        for k in range(j + 1, d):
            pts = []
            for t in range(m + 1):
                p = [0] * d
                p[j] = t
                p[k] = m - t
                pts.append(tuple(p))
            if all(p in image for p in pts):
                return GraphFamily.from_graphs(F.n, (image[p] for p in pts))
    return None


def semi_homogeneous_witness(G: OrderedGraph, a: int, b: int) -> Optional[frozenset[int]]:
    """The distance set of the interval [a, b], if it is semi-homogeneous.

    The interval qualifies when all its vertices have the same neighbourhood
    outside [a, b] and the inside adjacency depends only on distance: there
    is a set L with xy an edge iff |x - y| in L. Returns L, or None.
    """
    if not (1 <= a <= b <= G.n):
        raise InvalidInput(f"interval [{a},{b}] not inside [{G.n}]")
    rows = G.adjacency_rows()
    inside = 0
    for v in range(a, b + 1):
        inside |= 1 << (v - 1)
    outside_views = {rows[v - 1] & ~inside for v in range(a, b + 1)}
    if len(outside_views) != 1:
        return None
    dists = set()
    for delta in range(1, b - a + 1):
        vals = {bool(G.edges >> pair_index(x, x + delta) & 1) for x in range(a, b + 1 - delta)}
        if len(vals) != 1:
            return None
        if vals.pop():
            dists.add(delta)
    return frozenset(dists)


def interval_in_one_block(G: OrderedGraph, a: int, b: int) -> bool:
    """Whether [a, b] lies inside a single homogeneous block."""
    if not (1 <= a <= b <= G.n):
        raise InvalidInput(f"interval [{a},{b}] not inside [{G.n}]")
    for lo, hi in homogeneous_blocks(G):
        if lo <= a and b <= hi:
            return True
    return False
