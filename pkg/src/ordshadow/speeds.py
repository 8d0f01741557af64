"""Hereditary properties of ordered graphs as materialized level sequences.

A hereditary property is closed under induced subgraphs; since every induced
subgraph is reachable by single-vertex deletions, that is equivalent to the
shadow of each level lying inside the level below. The engine only ever
works with finite materializations (levels 0..N), so every question about a
property is decidable: speeds are exact cardinalities, downward closure is a
fixpoint computation, and monotonicity claims are checked level by level.

The level-indexed speed function is the object of interest: the named
linear-speed properties all have speed exactly n, the independent
consecutive-edge family counts 1, 2, 3, 5, 8, ... (each level splits over
whether position 1 carries an edge, giving s(n) = s(n-1) + s(n-2)), and its
k-truncations count sum_{i<=k} C(n-i, i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from . import families
from .errors import Infeasible, InvalidInput
from .graphs import GraphFamily, OrderedGraph, pair_count
from .reports import SCHEMA_VERSION

FORBIDDEN_MAX_N = 7


@dataclass(frozen=True)
class HereditaryProperty:
    """Levels 0..N of a (claimed) hereditary property."""

    name: str
    levels: tuple[GraphFamily, ...]
    origin: str = "unknown"   # named | closure-of-generators | forbidden-patterns

    def __post_init__(self):
        for n, fam in enumerate(self.levels):
            if fam.n != n:
                raise InvalidInput(f"level {n} holds graphs on [{fam.n}]")

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> GraphFamily:
        if not (0 <= n <= self.top):
            raise InvalidInput(f"level {n} not materialized (have 0..{self.top})")
        return self.levels[n]

    def speed(self, n: int) -> int:
        return len(self.level(n))

    def speeds(self) -> list[int]:
        return [len(f) for f in self.levels]

    def complement_image(self) -> "HereditaryProperty":
        return HereditaryProperty(
            self.name + "-complement-image",
            tuple(GraphFamily.from_graphs(f.n, (g.complement() for g in f))
                  for f in self.levels),
            self.origin)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "origin": self.origin,
            "levels": [{"n": f.n, "graphs": f.literals()} for f in self.levels],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HereditaryProperty":
        try:
            raw = list(data["levels"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"property object needs 'levels': {exc}") from exc
        by_n = {}
        for entry in raw:
            fam = GraphFamily.from_json_dict(entry)
            if fam.n in by_n:
                raise InvalidInput(f"level {fam.n} appears twice")
            by_n[fam.n] = fam
        if not by_n:
            raise InvalidInput("property has no levels")
        top = max(by_n)
        levels = tuple(by_n.get(n, GraphFamily(n)) for n in range(top + 1))
        return cls(str(data.get("name", "property")), levels,
                   str(data.get("origin", "unknown")))

    @classmethod
    def load(cls, path) -> "HereditaryProperty":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=1, sort_keys=True)
            fh.write("\n")


@dataclass(frozen=True)
class SpeedReport:
    name: str
    speeds: tuple[int, ...]
    monotone_from: int | None = None
    findings: tuple[str, ...] = ()

    def to_payload(self) -> dict:
        payload: dict = {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "speeds": list(self.speeds),
            "findings": list(self.findings),
        }
        if self.monotone_from is not None:
            payload["monotone_from"] = self.monotone_from
        return payload


def _normalize_generators(generators) -> list[OrderedGraph]:
    out: list[OrderedGraph] = []
    for item in generators:
        if isinstance(item, OrderedGraph):
            out.append(item)
        elif isinstance(item, GraphFamily):
            out.extend(item)
        else:
            raise InvalidInput(f"generator {item!r} is neither a graph nor a family")
    return out


def closure(generators, N: int, name: str = "closure") -> HereditaryProperty:
    """Smallest hereditary property containing the generators, levels 0..N."""
    if N < 0:
        raise InvalidInput("N must be nonnegative")
    gens = _normalize_generators(generators)
    too_big = [g for g in gens if g.n > N]
    if too_big:
        raise InvalidInput(f"generator {too_big[0]} lives above level {N}")
    levels: list[set[OrderedGraph]] = [set() for _ in range(N + 1)]
    for g in gens:
        levels[g.n].add(g)
    for n in range(N, 0, -1):
        below = levels[n - 1]
        for g in levels[n]:
            for v in range(1, n + 1):
                below.add(g.delete(v))
    return HereditaryProperty(
        name, tuple(GraphFamily.from_graphs(n, levels[n]) for n in range(N + 1)),
        "closure-of-generators")


def _avoider_masks(n: int, patterns: list[OrderedGraph]) -> list[int]:
    """Edge masks of the graphs on [n] with no induced copy of any pattern."""
    N = 1 << pair_count(n)
    keep = np.ones(N, dtype=bool)
    gs = np.arange(N, dtype=np.uint32)
    from itertools import combinations
    for pat in patterns:
        p = pat.n
        if p > n:
            continue
        if p == 0:
            return []  # the 0-vertex graph embeds in everything
        for verts in combinations(range(1, n + 1), p):
            sub = np.zeros(N, dtype=np.uint32)
            t = 0
            for b in range(1, p):
                for a in range(b):
                    old = (verts[b] - 1) * (verts[b] - 2) // 2 + (verts[a] - 1)
                    sub |= ((gs >> np.uint32(old)) & np.uint32(1)) << np.uint32(t)
                    t += 1
            keep &= sub != np.uint32(pat.edges)
    return [int(m) for m in np.nonzero(keep)[0]]


def contains_induced(G: OrderedGraph, pattern: OrderedGraph) -> bool:
    """Whether some vertex subset of G induces exactly the pattern."""
    from itertools import combinations
    if pattern.n > G.n:
        return False
    for verts in combinations(range(1, G.n + 1), pattern.n):
        if G.induced(verts) == pattern:
            return True
    return False


def from_forbidden(patterns, N: int, name: str = "avoiders") -> HereditaryProperty:
    """Levels 0..N of the class avoiding every pattern as an induced subgraph."""
    if N < 0:
        raise InvalidInput("N must be nonnegative")
    if N > FORBIDDEN_MAX_N:
        raise Infeasible(
            f"enumerating all graphs on [{N}] is over the N <= {FORBIDDEN_MAX_N} guard")
    pats = _normalize_generators(patterns)
    levels = []
    for n in range(N + 1):
        masks = _avoider_masks(n, pats)
        levels.append(GraphFamily.from_graphs(n, (OrderedGraph(n, m) for m in masks)))
    return HereditaryProperty(name, tuple(levels), "forbidden-patterns")


def is_hereditary(levels: Iterable[GraphFamily]) -> tuple[bool, dict | None]:
    """Check shadow containment level by level; returns the first violation
    as {'n', 'graph', 'vertex', 'missing'} when there is one."""
    seq = list(levels)
    for n in range(1, len(seq)):
        below = set(seq[n - 1].members)
        for g in seq[n]:
            for v in range(1, n + 1):
                h = g.delete(v)
                if h not in below:
                    return False, {"n": n, "graph": g.literal(), "vertex": v,
                                   "missing": h.literal()}
    return True, None


def _zero_level() -> GraphFamily:
    return GraphFamily.from_graphs(0, [OrderedGraph(0, 0)])


_LEVEL_BUILDERS = {
    "six-family-1": lambda n, k: families.six_family_level(1, n),
    "six-family-2": lambda n, k: families.six_family_level(2, n),
    "six-family-3": lambda n, k: families.six_family_level(3, n),
    "six-family-4": lambda n, k: families.six_family_level(4, n),
    "six-family-5": lambda n, k: families.six_family_level(5, n),
    "six-family-6": lambda n, k: families.six_family_level(6, n),
    "fibonacci": lambda n, k: families.fibonacci_level(n),
    "fibonacci-complement": lambda n, k: families.fibonacci_complement_level(n),
    "qk-consecutive": lambda n, k: families.qk_consecutive_level(k, n),
    "qk-nested": lambda n, k: families.qk_nested_level(k, n),
}


def named_property(name: str, N: int, k: int | None = None) -> HereditaryProperty:
    """Materialize a named property through level N.

    "qk-consecutive" and "qk-nested" are deliberately distinct names for the
    two readings of the k-edge family: at most k independent consecutive
    edges (speed sum_i C(n-i, i)) versus at most k disjoint left-to-right
    interval edges (speed sum_t C(n, 2t)). The two counts genuinely differ,
    so neither name silently stands in for the other. "fk-closure" is the
    downward closure of the two-consecutive-edge seed family.
    """
    if N < 0:
        raise InvalidInput("N must be nonnegative")
    if name == "fk-closure":
        if k is None:
            raise InvalidInput("fk-closure needs the parameter k")
        gens = [families.two_edge_seed_family(k, n) for n in range(1, N + 1)]
        prop = closure(gens, N, name=f"fk-closure-{k}")
        return HereditaryProperty(prop.name, prop.levels, "closure-of-generators")
    builder = _LEVEL_BUILDERS.get(name)
    if builder is None:
        raise InvalidInput(f"unknown property {name!r}")
    if name.startswith("qk-") and k is None:
        raise InvalidInput(f"property {name!r} needs the parameter k")
    label = name if k is None else f"{name}-{k}"
    levels = [_zero_level()]
    for n in range(1, N + 1):
        levels.append(builder(n, k))
    return HereditaryProperty(label, tuple(levels), "named")


PROPERTY_NAMES = tuple(_LEVEL_BUILDERS) + ("fk-closure",)


def qk_consecutive_speed_formula(k: int, n: int) -> int:
    return sum(comb(n - i, i) for i in range(k + 1) if n - i >= 0)


def qk_nested_speed_formula(k: int, n: int) -> int:
    return sum(comb(n, 2 * t) for t in range(k + 1))


def speed_sequence(P: HereditaryProperty, N: int | None = None) -> SpeedReport:
    """Speeds |P_0| .. |P_N| plus the point from which they are non-increasing."""
    top = P.top if N is None else N
    if top > P.top:
        raise InvalidInput(f"level {top} not materialized (have 0..{P.top})")
    speeds = tuple(P.speed(n) for n in range(top + 1))
    monotone_from = top
    while monotone_from > 0 and speeds[monotone_from - 1] >= speeds[monotone_from]:
        monotone_from -= 1
    return SpeedReport(P.name, speeds, monotone_from)


def verify_theorem_hered(P: HereditaryProperty, k: int) -> SpeedReport:
    """Check the small-level consequence: when |P_k| < k, every later level
    must satisfy |P_n| <= |P_k|.

    Any violation is reported with the suspect-implementation flag, because
    a larger later level contains a subfamily one bigger than P_k whose
    shadow fits inside P_k, i.e. a concrete small family with a deficient
    shadow; the report exhibits it for re-verification.
    """
    if not (0 <= k <= P.top):
        raise InvalidInput(f"level {k} not materialized (have 0..{P.top})")
    speeds = tuple(P.speeds())
    findings: list[str] = []
    base = speeds[k]
    if base >= k:
        findings.append(f"hypothesis |P_{k}| < {k} fails (|P_{k}| = {base}); vacuous")
    else:
        bad = [n for n in range(k, P.top + 1) if speeds[n] > base]
        if not bad:
            findings.append(
                f"|P_n| <= |P_{k}| = {base} holds for all {k} <= n <= {P.top}")
        for n in bad:
            sub = GraphFamily.from_graphs(n, P.level(n).members[:base + 1])
            sh = sub.shadow()
            findings.append(
                f"suspect-implementation: |P_{n}| = {speeds[n]} > |P_{k}| = {base}; "
                f"the first {base + 1} members of level {n} have shadow size "
                f"{len(sh)} inside a level of size {speeds[n - 1]}")
    report = speed_sequence(P)
    return SpeedReport(P.name, speeds, report.monotone_from, tuple(findings))
