"""The simplex lattice Z^d(n) and its shadow calculus.

Z^d(n) is the set of nonnegative integer d-tuples with coordinate sum n. The
shadow of A inside Z^d(n) is the set of points of Z^d(n-1) dominated by some
member of A; concretely, every point of A steps down one unit in each of its
positive coordinates. A *line* is the full set of points supported on two
fixed coordinates j < k: it has n+1 points and its shadow has exactly n.
Compressing A in direction j keeps the shadow points whose j-step-up lies in
A; the result has one element per member of A with a positive j coordinate.

The verification entry points sweep subsets of Z^d(n) smaller than 2n and
check the dichotomy "shadow at least as large as the set, or the set
contains a line", together with the weaker unconditional bound
|shadow| >= |A| - 1 on the same range.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Optional

from . import _kernels
from .errors import Infeasible, InvalidInput
from .reports import SCHEMA_VERSION

EXHAUSTIVE_POINT_CAP = 24  # subset scans enumerate within a 2^24 universe at most


def simplex_size(d: int, n: int) -> int:
    return comb(n + d - 1, d - 1)


@lru_cache(maxsize=None)
def simplex_points(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All of Z^d(n) in lexicographic order."""
    if d < 1 or n < 0:
        raise InvalidInput(f"Z^{d}({n}) needs d >= 1 and n >= 0")
    if d == 1:
        return ((n,),)
    out = []
    for first in range(n + 1):
        for rest in simplex_points(d - 1, n - first):
            out.append((first,) + rest)
    return tuple(out)


def pack_point(point: tuple[int, ...]) -> int:
    """Dense 8-bit-per-coordinate packing, usable as a rank-table key for
    d <= 8 and coordinates <= 255; larger points stay in tuple form."""
    if len(point) > 8 or any(c > 255 for c in point):
        raise InvalidInput("packed form supports d <= 8 and coordinates <= 255")
    out = 0
    for i, c in enumerate(point):
        out |= c << (8 * i)
    return out


def unpack_point(packed: int, d: int) -> tuple[int, ...]:
    return tuple(packed >> (8 * i) & 0xFF for i in range(d))


def line_points(d: int, n: int, j: int, k: int) -> tuple[tuple[int, ...], ...]:
    """The full line on coordinates j < k (1-based): n+1 points."""
    if not (1 <= j < k <= d):
        raise InvalidInput(f"line coordinates ({j},{k}) need 1 <= j < k <= {d}")
    pts = []
    for t in range(n + 1):
        p = [0] * d
        p[j - 1] = t
        p[k - 1] = n - t
        pts.append(tuple(p))
    return tuple(pts)


@dataclass(frozen=True, slots=True)
class LatticeSet:
    """A subset of Z^d(n); points are kept deduplicated in lexicographic order."""

    d: int
    n: int
    points: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.d < 1 or self.n < 0:
            raise InvalidInput(f"Z^{self.d}({self.n}) needs d >= 1 and n >= 0")
        seen = set()
        for p in self.points:
            if len(p) != self.d:
                raise InvalidInput(f"point {p} is not {self.d}-dimensional")
            if any(c < 0 for c in p) or sum(p) != self.n:
                raise InvalidInput(f"point {p} is not a nonnegative vector of sum {self.n}")
            if p in seen:
                raise InvalidInput(f"duplicate point {p}")
            seen.add(p)
        if any(self.points[i] >= self.points[i + 1] for i in range(len(self.points) - 1)):
            raise InvalidInput("points not in lexicographic order")

    @classmethod
    def from_points(cls, d: int, n: int, points: Iterable[tuple[int, ...]]) -> "LatticeSet":
        return cls(d, n, tuple(sorted({tuple(p) for p in points})))

    @classmethod
    def full(cls, d: int, n: int) -> "LatticeSet":
        return cls(d, n, simplex_points(d, n))

    @classmethod
    def line(cls, d: int, n: int, j: int, k: int) -> "LatticeSet":
        return cls.from_points(d, n, line_points(d, n, j, k))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def shadow(self) -> "LatticeSet":
        """All points of Z^d(n-1) dominated by a member: one unit down per
        positive coordinate, deduplicated."""
        if self.n < 1:
            raise InvalidInput("a set at level 0 has no shadow")
        out = set()
        for p in self.points:
            for j in range(self.d):
                if p[j] > 0:
                    out.add(p[:j] + (p[j] - 1,) + p[j + 1:])
        return LatticeSet.from_points(self.d, self.n - 1, out)

    def compress(self, j: int) -> "LatticeSet":
        """The subset of the shadow whose step back up in direction j lands
        in the set; it has one element per member with a positive j-th
        coordinate."""
        if not (1 <= j <= self.d):
            raise InvalidInput(f"direction {j} outside [1,{self.d}]")
        if self.n < 1:
            raise InvalidInput("a set at level 0 has no shadow to compress into")
        out = set()
        for p in self.points:
            if p[j - 1] > 0:
                out.add(p[:j - 1] + (p[j - 1] - 1,) + p[j:])
        return LatticeSet.from_points(self.d, self.n - 1, out)

    def find_line(self) -> Optional[tuple[int, int]]:
        """The first coordinate pair (lexicographic) whose full line lies in
        the set, or None."""
        pts = set(self.points)
        for j in range(1, self.d + 1):
            for k in range(j + 1, self.d + 1):
                if all(p in pts for p in line_points(self.d, self.n, j, k)):
                    return (j, k)
        return None

    # -- file format -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LatticeSet":
        try:
            return cls.from_points(int(data["d"]), int(data["n"]),
                                   (tuple(int(c) for c in p) for p in data["points"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"lattice set object needs 'd', 'n', 'points': {exc}") from exc


def extremal_sets(n: int) -> tuple[LatticeSet, LatticeSet]:
    """Two subsets of Z^3(n) of size 2n with shadows of size 2n-1 and no line.

    Both start from a union of two full lines (third coordinate in {0,1},
    respectively first or third coordinate 0) and delete the one point whose
    removal breaks every full line while leaving the shadow intact.
    """
    if n < 2:
        raise InvalidInput(f"extremal sets need n >= 2, got {n}")
    plane0 = [p for p in simplex_points(3, n) if p[2] == 0]
    plane1 = [p for p in simplex_points(3, n) if p[2] == 1]
    side = [p for p in simplex_points(3, n) if p[0] == 0]
    removed = (0, n, 0)
    a1 = LatticeSet.from_points(3, n, (p for p in plane0 + plane1 if p != removed))
    a2 = LatticeSet.from_points(3, n, (p for p in plane0 + side if p != removed))
    return a1, a2


# -- verification ----------------------------------------------------------


def _derived_rng(seed: int, *salt) -> random.Random:
    digest = hashlib.sha256(("/".join(map(str, (seed,) + salt))).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _scan_exhaustive(d: int, n: int, workers: int) -> tuple[int, list, list]:
    points = simplex_points(d, n)
    M = len(points)
    if M > EXHAUSTIVE_POINT_CAP:
        raise Infeasible(
            f"|Z^{d}({n})| = {M} exceeds the exhaustive guard of {EXHAUSTIVE_POINT_CAP} points")
    rank_down = {p: i for i, p in enumerate(simplex_points(d, n - 1))}
    shadow_masks = []
    for p in points:
        mask = 0
        for j in range(d):
            if p[j] > 0:
                mask |= 1 << rank_down[p[:j] + (p[j] - 1,) + p[j + 1:]]
        shadow_masks.append(mask)
    rank = {p: i for i, p in enumerate(points)}
    line_masks = []
    for j in range(1, d + 1):
        for k in range(j + 1, d + 1):
            lm = 0
            for p in line_points(d, n, j, k):
                lm |= 1 << rank[p]
            line_masks.append(lm)
    size_cap = 2 * n - 1
    checked = 0
    dich: list = []
    bound: list = []
    for lo, hi in split_range(M, workers):
        c, dv, bv = _kernels.subset_dichotomy_scan(shadow_masks, line_masks, size_cap, lo, hi)
        checked += c
        dich.extend(dv)
        bound.extend(bv)

    def decode(mask: int) -> list[list[int]]:
        return [list(points[i]) for i in range(M) if mask >> i & 1]

    return checked, sorted(map(decode, sorted(dich))), sorted(map(decode, sorted(bound)))


def split_range(total: int, workers: int) -> list[tuple[int, int]]:
    """Deterministic first-level partition of [0, total) into disjoint chunks.

    Chunks are executed in canonical order; because every merge below is
    associative and order-restoring, the merged result does not depend on
    the worker count.
    """
    if workers < 1:
        raise InvalidInput(f"worker count must be positive, got {workers}")
    w = min(workers, max(total, 1))
    bounds = [total * i // w for i in range(w + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(w)]


def _check_subset(d: int, n: int, pts: list[tuple[int, ...]]) -> tuple[bool, bool]:
    """(dichotomy holds, lower bound holds) for one subset."""
    A = LatticeSet.from_points(d, n, pts)
    sh = len(A.shadow())
    dich = sh >= len(A) or A.find_line() is not None
    return dich, sh >= len(A) - 1


def verify_line_dichotomy(d: int, n: int, mode: str = "exhaustive",
                          trials: int = 1000, seed: int | None = None,
                          workers: int = 1) -> dict:
    """Report on "every A in Z^d(n) with |A| < 2n has |shadow| >= |A| or
    contains a line" and on the companion bound |shadow| >= |A| - 1.

    Exhaustive mode walks all subsets of size < 2n (guarded by the universe
    cap); randomized mode draws `trials` uniform subsets of every size
    s < 2n from a generator derived from the mandatory seed.
    """
    if d < 1 or n < 1:
        raise InvalidInput(f"dichotomy scan needs d >= 1 and n >= 1, got ({d},{n})")
    start = time.perf_counter()
    params = {"d": d, "n": n, "mode": mode, "max_subset_size": 2 * n - 1,
              "universe": simplex_size(d, n)}
    if mode == "exhaustive":
        checked, dich, bound = _scan_exhaustive(d, n, workers)
        seed_out = None
    elif mode == "random":
        if seed is None:
            raise InvalidInput("randomized mode requires a seed")
        points = simplex_points(d, n)
        sizes = [s for s in range(1, 2 * n) if s <= len(points)]
        checked = 0
        dich, bound = [], []
        for lo, hi in split_range(trials, workers):
            for i in range(lo, hi):
                for s in sizes:
                    rng = _derived_rng(seed, s, i)
                    pts = rng.sample(points, s)
                    checked += 1
                    ok_dich, ok_bound = _check_subset(d, n, pts)
                    if not ok_dich:
                        dich.append(sorted(list(p) for p in pts))
                    if not ok_bound:
                        bound.append(sorted(list(p) for p in pts))
        params["trials"] = trials
        seed_out = seed
        dich.sort()
        bound.sort()
    else:
        raise InvalidInput(f"unknown mode {mode!r}")
    payload = {
        "schema": SCHEMA_VERSION,
        "lemma": "line-dichotomy",
        "params": params,
        "checked": checked,
        "violations": dich,
        "lower_bound_violations": bound,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
    if seed_out is not None:
        payload["seed"] = seed_out
    return payload
