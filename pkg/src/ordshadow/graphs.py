"""Ordered graphs on [n] as edge bitmasks, and deduplicated families of them.

An ordered graph is a graph whose vertex set is [n] = {1, ..., n} with the
usual order; equality is exact (two graphs on [n] are equal iff they have the
same edge set -- there is no isomorphism quotient). Edges are stored in a
single integer bitmask over the C(n,2) vertex pairs, indexed by

    pair_index(i, j) = (j-1)(j-2)/2 + (i-1)      for 1 <= i < j <= n,

i.e. colexicographically by the larger endpoint. With this indexing the pair
indices of [n] form a prefix of those of [n+1], so masks serialize and hash
stably across levels. The vertex count is capped at 32 (a 496-bit mask); the
exhaustive searches elsewhere in the package have far smaller guards of
their own.

The shadow of G is the set of ordered graphs G - v obtained by deleting one
vertex (the survivors close ranks, so the result lives on [n-1]); the shadow
of a family is the deduplicated union of its members' shadows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidInput

MAX_VERTICES = 32


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair {i, j}, 1 <= i < j."""
    if not (1 <= i < j):
        raise InvalidInput(f"pair ({i},{j}) must satisfy 1 <= i < j")
    return (j - 1) * (j - 2) // 2 + (i - 1)


@lru_cache(maxsize=None)
def _deletion_map(n: int, v: int) -> tuple[int, ...]:
    # old pair index feeding bit t of the deleted graph on [n-1]
    out = []
    for b in range(2, n):
        for a in range(1, b):
            oa = a + (a >= v)
            ob = b + (b >= v)
            out.append(pair_index(oa, ob))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class OrderedGraph:
    """An ordered graph: vertex count plus the edge bitmask."""

    n: int
    edges: int = 0

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise InvalidInput(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if not (0 <= self.edges < (1 << pair_count(self.n))):
            raise InvalidInput(f"edge mask {self.edges:#x} has bits beyond C({self.n},2)")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "OrderedGraph":
        """Graph on [n] with exactly the given edges; duplicates are idempotent."""
        mask = 0
        for i, j in pairs:
            if not (1 <= i < j <= n):
                raise InvalidInput(f"edge ({i},{j}) not a pair with 1 <= i < j <= {n}")
            mask |= 1 << pair_index(i, j)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "OrderedGraph":
        return cls(n, 0)

    @classmethod
    def complete(cls, n: int) -> "OrderedGraph":
        return cls(n, (1 << pair_count(n)) - 1)

    @classmethod
    def from_literal(cls, text: str) -> "OrderedGraph":
        """Parse the "<n>:<hex>" literal form."""
        head, sep, tail = text.strip().partition(":")
        if not sep:
            raise InvalidInput(f"graph literal {text!r} lacks ':'")
        try:
            n = int(head)
            mask = int(tail, 16)
        except ValueError as exc:
            raise InvalidInput(f"bad graph literal {text!r}") from exc
        return cls(n, mask)

    def literal(self) -> str:
        """Serialize as "<n>:<hex>" (lowercase big-endian hex; empty graph -> "<n>:0")."""
        return f"{self.n}:{self.edges:x}"

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        if not (1 <= i < j <= self.n):
            raise InvalidInput(f"pair ({i},{j}) not inside [{self.n}]")
        return bool(self.edges >> pair_index(i, j) & 1)

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for j in range(2, self.n + 1):
            for i in range(1, j):
                if self.edges >> pair_index(i, j) & 1:
                    out.append((i, j))
        out.sort()
        return out

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def neighbor_mask(self, v: int) -> int:
        """Neighbourhood of v as a bitmask over vertices (bit u-1 set iff uv is an edge)."""
        if not (1 <= v <= self.n):
            raise InvalidInput(f"vertex {v} not inside [{self.n}]")
        mask = 0
        for u in range(1, self.n + 1):
            if u != v and self.edges >> pair_index(min(u, v), max(u, v)) & 1:
                mask |= 1 << (u - 1)
        return mask

    def adjacency_rows(self) -> list[int]:
        """neighbor_mask for every vertex, computed in one sweep."""
        rows = [0] * self.n
        e = self.edges
        for j in range(2, self.n + 1):
            for i in range(1, j):
                if e >> pair_index(i, j) & 1:
                    rows[i - 1] |= 1 << (j - 1)
                    rows[j - 1] |= 1 << (i - 1)
        return rows

    # -- the operations ----------------------------------------------------

    def delete(self, v: int) -> "OrderedGraph":
        """G - v: the graph induced on [n] minus v, survivors relabelled to [n-1]."""
        if self.n < 1:
            raise InvalidInput("cannot delete from the 0-vertex graph")
        if not (1 <= v <= self.n):
            raise InvalidInput(f"vertex {v} not inside [{self.n}]")
        e = self.edges
        mask = 0
        for t, old in enumerate(_deletion_map(self.n, v)):
            mask |= (e >> old & 1) << t
        return OrderedGraph(self.n - 1, mask)

    def induced(self, vertices: Iterable[int]) -> "OrderedGraph":
        """Graph induced on the given vertex set, with the inherited order."""
        u = sorted(set(vertices))
        if u and not (1 <= u[0] and u[-1] <= self.n):
            raise InvalidInput(f"vertex set {u} not inside [{self.n}]")
        mask = 0
        for b in range(1, len(u)):
            for a in range(b):
                if self.edges >> pair_index(u[a], u[b]) & 1:
                    mask |= 1 << pair_index(a + 1, b + 1)
        return OrderedGraph(len(u), mask)

    def complement(self) -> "OrderedGraph":
        return OrderedGraph(self.n, self.edges ^ ((1 << pair_count(self.n)) - 1))

    def reverse(self) -> "OrderedGraph":
        """Mirror image: vertex i becomes n+1-i, edges carried along."""
        n = self.n
        mask = 0
        for j in range(2, n + 1):
            for i in range(1, j):
                if self.edges >> pair_index(i, j) & 1:
                    mask |= 1 << pair_index(n + 1 - j, n + 1 - i)
        return OrderedGraph(n, mask)

    def shadow(self, vertices: Iterable[int] | None = None) -> "GraphFamily":
        """Deduplicated {G - v}; restricted to the given deletion set when supplied.

        The full shadow requires n >= 1. A restricted shadow over the empty
        set is the empty family on [n-1].
        """
        if self.n < 1:
            raise InvalidInput("the 0-vertex graph has no shadow")
        if vertices is None:
            vs = range(1, self.n + 1)
        else:
            vs = sorted(set(vertices))
            if vs and not (1 <= vs[0] and vs[-1] <= self.n):
                raise InvalidInput(f"deletion set {vs} not inside [{self.n}]")
        return GraphFamily.from_graphs(self.n - 1, (self.delete(v) for v in vs))

    def __str__(self) -> str:
        return self.literal()


@dataclass(frozen=True, slots=True)
class GraphFamily:
    """A duplicate-free set of ordered graphs sharing one vertex count.

    Iteration order is ascending by edge bitmask, which makes serialization,
    hashing and search traversal canonical.
    """

    n: int
    members: tuple[OrderedGraph, ...] = ()

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise InvalidInput(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        seen = set()
        for g in self.members:
            if g.n != self.n:
                raise InvalidInput(f"member {g} is not on [{self.n}]")
            if g.edges in seen:
                raise InvalidInput(f"duplicate member {g}")
            seen.add(g.edges)
        if any(self.members[i].edges >= self.members[i + 1].edges
               for i in range(len(self.members) - 1)):
            raise InvalidInput("members not in ascending bitmask order")

    @classmethod
    def from_graphs(cls, n: int, graphs: Iterable[OrderedGraph]) -> "GraphFamily":
        """Deduplicate and sort; the canonical constructor."""
        unique = {g.edges: g for g in graphs}
        return cls(n, tuple(unique[m] for m in sorted(unique)))

    @classmethod
    def from_literals(cls, n: int, literals: Iterable[str]) -> "GraphFamily":
        return cls.from_graphs(n, (OrderedGraph.from_literal(s) for s in literals))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[OrderedGraph]:
        return iter(self.members)

    def __contains__(self, g: OrderedGraph) -> bool:
        return g.n == self.n and g in self.members

    def literals(self) -> list[str]:
        return [g.literal() for g in self.members]

    def shadow(self) -> "GraphFamily":
        """Deduplicated union of the members' shadows; empty family allowed."""
        if self.n < 1:
            raise InvalidInput("a family on [0] has no shadow")
        return GraphFamily.from_graphs(
            self.n - 1, (g.delete(v) for g in self.members for v in range(1, self.n + 1)))

    # -- file formats ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "graphs": self.literals()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GraphFamily":
        try:
            n = int(data["n"])
            literals = list(data["graphs"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"family object needs 'n' and 'graphs': {exc}") from exc
        fam = cls.from_literals(n, literals)
        return fam

    @classmethod
    def parse(cls, text: str) -> "GraphFamily":
        """Load from either format: a JSON object or one literal per line
        ('#' starts a comment)."""
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return cls.from_json_dict(json.loads(text))
        literals = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                literals.append(line)
        if not literals:
            raise InvalidInput("family text contains no graph literals")
        graphs = [OrderedGraph.from_literal(s) for s in literals]
        ns = {g.n for g in graphs}
        if len(ns) != 1:
            raise InvalidInput(f"family literals mix vertex counts {sorted(ns)}")
        return cls.from_graphs(ns.pop(), graphs)

    @classmethod
    def load(cls, path) -> "GraphFamily":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read())

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=1, sort_keys=True)
            fh.write("\n")
