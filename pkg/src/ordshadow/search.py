"""Exhaustive and branch-and-bound verification over families of ordered graphs.

Every entry point returns a SearchReport. The exhaustive scans enumerate
families as ascending combinations of a pre-filtered candidate list and cut
a subtree as soon as the running shadow union is provably too large, which
is sound because shadows only grow when members are added. Candidate
pre-filters come from two facts: every member's shadow sits inside the
family shadow, and a single graph has at least (n - excess)/2 distinct
deletions, so small-shadow members must have large excess.

Budgets: exhaustive scans are gated a priori (the binomial node count must
fit the budget, otherwise the request is infeasible); the minimum-shadow
searches run under an exact in-flight node budget and return a best-so-far
report flagged incomplete when it runs out.

Worker counts only choose how the first level of the search tree is chunked.
Chunks execute sequentially in canonical order, carrying the budget and the
running bound, so reports are identical for every worker count; a parallel
executor would have to give chunks independent bounds to keep that property.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .blocks import (GraphType, contains_line, group_by_type, phi, type_excess,
                     type_of, type_preserving_shadow)
from .errors import Infeasible, InvalidInput
from .families import named_family  # re-exported: the named-family surface
from .graphs import GraphFamily, OrderedGraph, pair_count
from .lattice import split_range
from .reports import SCHEMA_VERSION
from .tables import GraphTables, graph_tables, mask_rows_for, union_shadow_size

DEFAULT_BUDGET = 10 ** 9
COLLECT_CAP = 1 << 21   # deficient families kept in memory before giving up

__all__ = [
    "SearchReport", "all_graphs", "all_graphs_list", "named_family",
    "verify_shadow_theorem", "verify_type_dichotomy", "verify_line_family_bound",
    "verify_difftypes", "verify_allcliques", "question_5_1", "min_shadow",
    "verify_conjecture_generalk", "check_obs_calc", "DEFAULT_BUDGET",
]


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one verification or search run."""

    target: str
    params: dict
    status: str                                  # verified | counterexamples | computed
    value: int | None = None
    witness: GraphFamily | None = None
    counterexamples: tuple[GraphFamily, ...] = ()
    checked: int = 0
    pruned: int = 0
    seed: int | None = None
    elapsed_ms: int = 0
    complete: bool = True
    findings: tuple[str, ...] = ()
    suspect_implementation: bool = False

    def __post_init__(self):
        if self.status == "verified" and self.counterexamples:
            raise ValueError("a verified report cannot carry counterexamples")
        if self.status == "computed" and self.value is not None and self.witness is None \
                and self.complete:
            raise ValueError("a computed value needs a witness")

    def to_payload(self) -> dict:
        payload: dict = {
            "schema": SCHEMA_VERSION,
            "target": self.target,
            "params": self.params,
            "status": self.status,
            "counterexamples": [f.to_json_dict() for f in self.counterexamples],
            "checked": self.checked,
            "pruned": self.pruned,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.value is not None:
            payload["value"] = self.value
        if self.witness is not None:
            payload["witness"] = self.witness.to_json_dict()
        if self.seed is not None:
            payload["seed"] = self.seed
        if not self.complete:
            payload["incomplete"] = True
        if self.findings:
            payload["findings"] = list(self.findings)
        if self.suspect_implementation:
            payload["suspect_implementation"] = True
        return payload


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _derived_rng(seed: int, *salt) -> random.Random:
    digest = hashlib.sha256(("/".join(map(str, (seed,) + salt))).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def all_graphs(n: int) -> Iterator[OrderedGraph]:
    """All ordered graphs on [n] in ascending bitmask order (a stream; no cap)."""
    if n < 0:
        raise InvalidInput("vertex count must be nonnegative")
    for mask in range(1 << pair_count(n)):
        yield OrderedGraph(n, mask)


def all_graphs_list(n: int) -> list[OrderedGraph]:
    """Materialized all_graphs; guarded at n <= 7 (2^21 graphs)."""
    if n > 7:
        raise Infeasible(f"materializing 2^C({n},2) graphs is over the n <= 7 guard")
    return list(all_graphs(n))


def _family_count_estimate(ncand: int, max_size: int) -> int:
    return sum(comb(ncand, s) for s in range(1, max_size + 1))


def _gate_budget(estimate: int, budget: int, what: str) -> None:
    if estimate > budget:
        raise Infeasible(
            f"{what}: estimated {estimate} nodes exceeds the budget of {budget}")


def _decode_family(n: int, cand_masks: np.ndarray, indices: Iterable[int]) -> GraphFamily:
    return GraphFamily.from_graphs(
        n, (OrderedGraph(n, int(cand_masks[i])) for i in indices))


def _reverify_deficient(family: GraphFamily, slack: int) -> GraphFamily:
    """Recompute the shadow from scratch before emitting a counterexample."""
    if len(family.shadow()) >= len(family) - slack:
        raise RuntimeError(
            f"scan reported {family.literals()} as deficient but recomputation disagrees")
    return family


def _theorem1_candidates(tables: GraphTables, n: int, max_size: int,
                         slack: int = 0) -> np.ndarray:
    """Indices of graphs that could belong to a family of size <= max_size
    whose shadow is smaller than size - slack.

    Such a member has |shadow(G)| <= max_size - 1 - slack; the cheap excess
    filter excess >= n - 2(max_size - 1 - slack) is implied and applied
    first.
    """
    bound = max_size - 1 - slack
    coarse = tables.excesses >= n - 2 * bound
    fine = tables.shadow_sizes <= bound
    return np.nonzero(coarse & fine)[0].astype(np.int64)


def _run_deficiency_chunks(masks: np.ndarray, max_size: int, slack: int,
                           workers: int) -> tuple[int, int, list[tuple[int, ...]]]:
    checked = 0
    pruned = 0
    deficient: list[tuple[int, ...]] = []
    cap = COLLECT_CAP
    for lo, hi in split_range(masks.shape[0], workers):
        c, p, d = _kernels.deficiency_scan(masks, max_size, slack, lo, hi,
                                           cap - len(deficient))
        checked += c
        pruned += p
        deficient.extend(d)
    return checked, pruned, sorted(deficient)


def verify_shadow_theorem(n: int, max_size: int, budget: int = DEFAULT_BUDGET,
                          workers: int = 1) -> SearchReport:
    """Exhaustively confirm that every family of at most max_size ordered
    graphs on [n] has a shadow at least as large as itself.

    max_size must stay below n (larger families genuinely violate the
    bound: the prefix cliques have n members and a shadow of n-1).
    """
    start = time.perf_counter()
    if n < 2:
        raise InvalidInput("the search needs n >= 2")
    if not (0 <= max_size <= n - 1):
        raise InvalidInput(f"max_size must lie in 0..{n - 1}, got {max_size}")
    params = {"n": n, "max_size": max_size, "budget": budget}
    if max_size == 0:
        return SearchReport("theorem1", params, "verified", elapsed_ms=_ms(start))
    tables = graph_tables(n)
    cand = _theorem1_candidates(tables, n, max_size)
    params["candidates"] = int(cand.size)
    _gate_budget(_family_count_estimate(cand.size, max_size), budget,
                 f"theorem1 n={n} max_size={max_size}")
    masks = mask_rows_for(tables.masks, cand)
    checked, pruned, deficient = _run_deficiency_chunks(masks, max_size, 0, workers)
    counterexamples = tuple(_reverify_deficient(_decode_family(n, cand, t), 0)
                            for t in deficient)
    return SearchReport(
        "theorem1", params,
        "counterexamples" if counterexamples else "verified",
        counterexamples=counterexamples, checked=checked, pruned=pruned,
        elapsed_ms=_ms(start),
        suspect_implementation=bool(counterexamples) and n >= 136)


def _type_dichotomy_holds(family: GraphFamily) -> tuple[bool, list[str]]:
    """Check one deficient family: some type class must itself be deficient
    under the type-preserving shadow, and for at least one such class either
    the class has >= twice the type excess members or it contains a line."""
    notes = []
    deficient_types: list[tuple[GraphType, GraphFamily]] = []
    for T, sub in sorted(group_by_type(family).items(), key=lambda kv: kv[0].literal()):
        if len(type_preserving_shadow(sub)) < len(sub):
            deficient_types.append((T, sub))
    if not deficient_types:
        notes.append("no type class is deficient under the type-preserving shadow")
        return False, notes
    for T, sub in deficient_types:
        m = type_excess(T, family.n)
        if len(sub) >= 2 * m or contains_line(sub) is not None:
            return True, notes
    notes.append("no deficient type class is large or contains a line")
    return False, notes


def verify_type_dichotomy(n: int, max_size: int, budget: int = DEFAULT_BUDGET,
                          workers: int = 1) -> SearchReport:
    """For every family (size <= max_size) with a deficient shadow, confirm
    the type-level dichotomy: some type class is deficient under the
    type-preserving shadow and is either large (>= twice its excess) or
    contains a line."""
    start = time.perf_counter()
    if n < 2:
        raise InvalidInput("the search needs n >= 2")
    if max_size < 1:
        raise InvalidInput("max_size must be positive")
    tables = graph_tables(n)
    cand = _theorem1_candidates(tables, n, max_size)
    params = {"n": n, "max_size": max_size, "budget": budget,
              "candidates": int(cand.size)}
    _gate_budget(_family_count_estimate(cand.size, max_size), budget,
                 f"gline n={n} max_size={max_size}")
    masks = mask_rows_for(tables.masks, cand)
    checked, pruned, deficient = _run_deficiency_chunks(masks, max_size, 0, workers)
    params["deficient_families"] = len(deficient)
    violations = []
    findings: list[str] = []
    for t in deficient:
        family = _decode_family(n, cand, t)
        ok, notes = _type_dichotomy_holds(family)
        if not ok:
            violations.append(family)
            findings.extend(f"{family.literals()}: {note}" for note in notes)
    return SearchReport(
        "gline", params,
        "counterexamples" if violations else "verified",
        counterexamples=tuple(violations), checked=checked, pruned=pruned,
        elapsed_ms=_ms(start), findings=tuple(findings),
        suspect_implementation=bool(violations))


def verify_line_family_bound(n: int, budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Within every type class on [n], check that each family containing a
    line has a shadow of size at least min(2m + 1, family size), where m is
    the class excess.

    Families are enumerated as line union extras inside the full class;
    classes are the fibres of the type map over all graphs on [n]."""
    start = time.perf_counter()
    if not (2 <= n <= 6):
        raise Infeasible(f"the full type sweep is limited to 2 <= n <= 6, got {n}")
    tables = graph_tables(n)
    classes: dict[GraphType, list[int]] = {}
    for mask in range(1 << pair_count(n)):
        classes.setdefault(type_of(OrderedGraph(n, mask)), []).append(mask)
    params = {"n": n, "budget": budget, "types": len(classes)}
    checked = 0
    violations = []
    findings: list[str] = []
    estimate = 0
    for T, members in sorted(classes.items(), key=lambda kv: kv[0].literal()):
        m = type_excess(T, n)
        d = T.d
        expect = comb(m + d - 1, d - 1) if d >= 1 else 1
        if len(members) != expect:
            findings.append(f"type {T}: class has {len(members)} members, "
                            f"lattice identification predicts {expect}")
        if m == 0:
            estimate += 1
        elif d >= 2:
            free = len(members) - (m + 1)
            estimate += comb(d, 2) * (1 << max(free, 0))
    _gate_budget(estimate, budget, f"2mT n={n}")

    for T, members in sorted(classes.items(), key=lambda kv: kv[0].literal()):
        m = type_excess(T, n)
        d = T.d
        by_point = {phi(OrderedGraph(n, mask)): mask for mask in members}
        line_sets: list[tuple[int, ...]] = []
        if m == 0:
            line_sets.append(tuple(sorted(members)))
        elif d >= 2:
            for j in range(d):
                for k in range(j + 1, d):
                    pts = []
                    for t in range(m + 1):
                        p = [0] * d
                        p[j] = t
                        p[k] = m - t
                        pts.append(tuple(p))
                    if all(p in by_point for p in pts):
                        line_sets.append(tuple(sorted(by_point[p] for p in pts)))
        seen: set[tuple[int, ...]] = set()
        for base in line_sets:
            extras = sorted(set(members) - set(base))
            for bits in range(1 << len(extras)):
                fam_masks = tuple(sorted(set(base) | {extras[i] for i in range(len(extras))
                                                      if bits >> i & 1}))
                if fam_masks in seen:
                    continue
                seen.add(fam_masks)
                checked += 1
                size = union_shadow_size(tables.masks, list(fam_masks))
                if size < min(2 * m + 1, len(fam_masks)):
                    violations.append(GraphFamily.from_graphs(
                        n, (OrderedGraph(n, g) for g in fam_masks)))
    return SearchReport(
        "2mT", params,
        "counterexamples" if violations else "verified",
        counterexamples=tuple(violations), checked=checked,
        elapsed_ms=_ms(start), findings=tuple(findings),
        suspect_implementation=bool(violations))


def verify_difftypes(n: int, t_max: int, m_max: int, mode: str = "exhaustive",
                     trials: int = 1000, seed: int | None = None,
                     budget: int = DEFAULT_BUDGET, workers: int = 1) -> SearchReport:
    """Check the joint-shadow lower bound for families of up to t_max
    distinct graphs of excess at most m_max:

        |shadow| * (2(n - e) + 32 s)  >=  s (n - e)^2

    with s the family size and e the largest member excess (all integer
    arithmetic). Exhaustive mode sweeps every family from the filtered
    candidates; randomized mode samples seeded families."""
    start = time.perf_counter()
    if n < 2:
        raise InvalidInput("the sweep needs n >= 2")
    if t_max < 1 or m_max < 0:
        raise InvalidInput("t_max must be >= 1 and m_max >= 0")
    tables = graph_tables(n)
    cand = np.nonzero(tables.excesses <= m_max)[0].astype(np.int64)
    params = {"n": n, "t_max": t_max, "m_max": m_max, "mode": mode,
              "candidates": int(cand.size), "budget": budget}
    masks = mask_rows_for(tables.masks, cand)
    exc = np.ascontiguousarray(tables.excesses[cand])
    violations: list[tuple[int, ...]] = []
    if mode == "exhaustive":
        _gate_budget(_family_count_estimate(cand.size, t_max), budget,
                     f"difftypes n={n} t_max={t_max} m_max={m_max}")
        checked = 0
        for lo, hi in split_range(cand.size, workers):
            c, v = _kernels.difftypes_scan(masks, exc, n, t_max, lo, hi)
            checked += c
            violations.extend(v)
        seed_out = None
    elif mode == "random":
        if seed is None:
            raise InvalidInput("randomized mode requires a seed")
        checked = 0
        for lo, hi in split_range(trials, workers):
            for i in range(lo, hi):
                rng = _derived_rng(seed, i)
                s = rng.randint(1, min(t_max, cand.size))
                picked = tuple(sorted(rng.sample(range(cand.size), s)))
                checked += 1
                e = int(exc[list(picked)].max())
                sh = union_shadow_size(masks, list(picked))
                if sh * (2 * (n - e) + 32 * s) < s * (n - e) ** 2:
                    violations.append(picked)
        params["trials"] = trials
        seed_out = seed
    else:
        raise InvalidInput(f"unknown mode {mode!r}")
    counterexamples = tuple(_decode_family(n, cand, t) for t in sorted(set(violations)))
    return SearchReport(
        "difftypes", params,
        "counterexamples" if counterexamples else "verified",
        counterexamples=counterexamples, checked=checked, seed=seed_out,
        elapsed_ms=_ms(start), suspect_implementation=bool(counterexamples))


def _composition_stats(parts: tuple[int, ...]) -> tuple[int, int]:
    edges = sum(c * (c - 1) // 2 for c in parts)
    return len(parts), edges


def verify_allcliques(n: int, mode: str = "random", trials: int = 1000,
                      seed: int | None = None) -> SearchReport:
    """For graphs whose components are all cliques (encoded as compositions
    of n), check the component-count lower bound r (n + 2e) >= n^2."""
    start = time.perf_counter()
    if n < 1:
        raise InvalidInput("the check needs n >= 1")
    params = {"n": n, "mode": mode}
    violations: list[list[int]] = []

    def check(parts: tuple[int, ...]) -> None:
        r, e = _composition_stats(parts)
        if r * (n + 2 * e) < n * n:
            violations.append(list(parts))

    if mode == "exhaustive":
        if n > 20:
            raise Infeasible(f"2^{n - 1} compositions is over the n <= 20 guard")
        checked = 0
        for bits in range(1 << (n - 1)):
            parts = []
            size = 1
            for i in range(n - 1):
                if bits >> i & 1:
                    parts.append(size)
                    size = 1
                else:
                    size += 1
            parts.append(size)
            check(tuple(parts))
            checked += 1
        seed_out = None
    elif mode == "random":
        if seed is None:
            raise InvalidInput("randomized mode requires a seed")
        checked = 0
        for i in range(trials):
            rng = _derived_rng(seed, i)
            bits = rng.getrandbits(n - 1) if n > 1 else 0
            parts = []
            size = 1
            for b in range(n - 1):
                if bits >> b & 1:
                    parts.append(size)
                    size = 1
                else:
                    size += 1
            parts.append(size)
            check(tuple(parts))
            checked += 1
        params["trials"] = trials
        seed_out = seed
    else:
        raise InvalidInput(f"unknown mode {mode!r}")
    status = "counterexamples" if violations else "verified"
    return SearchReport("allcliques", params, status, checked=checked,
                        seed=seed_out, elapsed_ms=_ms(start),
                        findings=tuple(f"composition {v}" for v in violations),
                        suspect_implementation=bool(violations))


def _greedy_seed(n: int, t: int, tables: GraphTables) -> tuple[int, GraphFamily]:
    """A cheap upper bound for the minimum shadow: prefix cliques first,
    then single consecutive edges, greedily keeping the union small."""
    masks: list[int] = []
    for k in range(1, min(t, n) + 1):
        g = 0
        for j in range(2, k + 1):
            for i in range(1, j):
                g |= 1 << ((j - 1) * (j - 2) // 2 + (i - 1))
        masks.append(g)
    k = 1
    while len(masks) < t and k < n:
        g = 1 << ((k) * (k - 1) // 2 + (k - 1))  # edge (k, k+1)
        if g not in masks:
            masks.append(g)
        k += 1
    extra = 0
    while len(masks) < t:
        if extra not in masks:
            masks.append(extra)
        extra += 1
    masks = sorted(masks)
    family = GraphFamily.from_graphs(n, (OrderedGraph(n, m) for m in masks))
    return union_shadow_size(tables.masks, masks), family


def min_shadow(n: int, t: int, budget: int = DEFAULT_BUDGET,
               workers: int = 1) -> SearchReport:
    """Branch-and-bound minimum of |shadow| over families of exactly t
    graphs on [n], with a witness attaining it.

    Runs under an exact node budget; when it is exhausted the report is
    flagged incomplete and carries the best family seen so far."""
    start = time.perf_counter()
    if n < 2:
        raise InvalidInput("the search needs n >= 2")
    tables = graph_tables(n)
    total = 1 << pair_count(n)
    if not (1 <= t <= total):
        raise InvalidInput(f"family size must lie in 1..{total}")
    params = {"n": n, "t": t, "budget": budget}
    best, witness = _greedy_seed(n, t, tables)
    checked = 0
    pruned = 0
    complete = True
    remaining = budget
    for lo, hi in split_range(total, workers):
        b, w, c, p, done = _kernels.min_shadow_scan(tables.masks, t, lo, hi,
                                                    best, remaining)
        checked += c
        pruned += p
        remaining -= c
        if w is not None and b < best:
            best = b
            witness = _decode_family(n, np.arange(total, dtype=np.int64), w)
        if not done:
            complete = False
            break
    return SearchReport(
        "min-shadow", params, "computed", value=best, witness=witness,
        checked=checked, pruned=pruned, elapsed_ms=_ms(start), complete=complete)


def question_5_1(n: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> SearchReport:
    """Exact minimum of |shadow| over distinct pairs of excess-0 graphs on
    [n], with a witness pair; the report states whether it is >= n - 1."""
    start = time.perf_counter()
    if n < 2:
        raise InvalidInput("the search needs n >= 2")
    tables = graph_tables(n)
    cand = np.nonzero(tables.excesses == 0)[0].astype(np.int64)
    if cand.size < 2:
        raise InvalidInput(f"fewer than two excess-0 graphs on [{n}]")
    params = {"n": n, "t": 2, "budget": budget,
              "candidates": int(cand.size)}
    masks = mask_rows_for(tables.masks, cand)
    best = 2 * n + 1  # any pair shadow is smaller than this
    witness_idx: tuple[int, ...] | None = None
    checked = 0
    pruned = 0
    complete = True
    remaining = budget
    for lo, hi in split_range(cand.size, workers):
        b, w, c, p, done = _kernels.min_shadow_scan(masks, 2, lo, hi, best, remaining)
        checked += c
        pruned += p
        remaining -= c
        if w is not None and b < best:
            best = b
            witness_idx = w
        if not done:
            complete = False
            break
    if witness_idx is None:
        raise Infeasible("budget exhausted before any pair was evaluated")
    witness = _decode_family(n, cand, witness_idx)
    return SearchReport(
        "question-5-1", params, "computed", value=best, witness=witness,
        checked=checked, pruned=pruned, elapsed_ms=_ms(start), complete=complete,
        findings=(f"min >= n-1: {best >= n - 1}",))


def default_fk(k: int) -> int:
    """The default linear-speed offset (k-1)(k+4)/2; callers may override."""
    return (k - 1) * (k + 4) // 2


def verify_conjecture_generalk(n: int, k: int, f_k: int | None = None,
                               budget: int = DEFAULT_BUDGET,
                               workers: int = 1) -> SearchReport:
    """Sweep families with fewer than k*n - f_k members for violations of
    |shadow| >= |family| - k + 1. Outcomes are findings: a counterexample is
    a successful run (the claim is open for k >= 2)."""
    start = time.perf_counter()
    if n < 2 or k < 1:
        raise InvalidInput("the sweep needs n >= 2 and k >= 1")
    if f_k is None:
        f_k = default_fk(k)
    max_size = k * n - f_k - 1
    slack = k - 1
    params = {"n": n, "k": k, "f_k": f_k, "max_size": max_size,
              "budget": budget}
    if max_size < 1:
        return SearchReport("conjecture-k", params, "verified",
                            elapsed_ms=_ms(start),
                            findings=("size bound is empty; vacuous",))
    tables = graph_tables(n)
    cand = _theorem1_candidates(tables, n, max_size, slack)
    params["candidates"] = int(cand.size)
    _gate_budget(_family_count_estimate(cand.size, max_size), budget,
                 f"conjecture-k n={n} k={k}")
    masks = mask_rows_for(tables.masks, cand)
    checked, pruned, deficient = _run_deficiency_chunks(masks, max_size, slack, workers)
    counterexamples = tuple(_reverify_deficient(_decode_family(n, cand, t), slack)
                            for t in deficient)
    return SearchReport(
        "conjecture-k", params,
        "counterexamples" if counterexamples else "verified",
        counterexamples=counterexamples, checked=checked, pruned=pruned,
        elapsed_ms=_ms(start),
        suspect_implementation=bool(counterexamples) and k == 1 and n >= 136)


def check_obs_calc(n_cap: int = 500, t_cap: int = 40, m_cap: int = 60,
                   m: int | None = None, n: int | None = None,
                   t: int | None = None) -> SearchReport:
    """Arithmetic sweep of the two closing inequalities.

    First: (m+1)(n-m)^2 >= (n-1)(2n + 30m + 32) for 2 <= m <= n/2, n >= 136.
    Second: t(n-m)^2 >= (n-1)(2(n-m) + 32t) for t >= 3, n >= 4m + 94.
    With explicit m/n/t this evaluates the single point instead, reporting
    out-of-domain queries as findings rather than failures.
    """
    start = time.perf_counter()
    params = {"n_cap": n_cap, "t_cap": t_cap, "m_cap": m_cap}
    findings: list[str] = []
    violations: list[str] = []
    checked = 0

    def first_holds(mm: int, nn: int) -> bool:
        return (mm + 1) * (nn - mm) ** 2 >= (nn - 1) * (2 * nn + 30 * mm + 32)

    def second_holds(tt: int, mm: int, nn: int) -> bool:
        return tt * (nn - mm) ** 2 >= (nn - 1) * (2 * (nn - mm) + 32 * tt)

    if m is not None or t is not None or n is not None:
        if m is None or n is None:
            raise InvalidInput("a point query needs at least m and n")
        params.update({"m": m, "n": n})
        if t is None:
            if 2 <= m <= n // 2 and n >= 136:
                checked += 1
                if not first_holds(m, n):
                    violations.append(f"first inequality fails at m={m}, n={n}")
            else:
                findings.append(f"(m={m}, n={n}) outside the first inequality domain "
                                "(needs 2 <= m <= n/2 and n >= 136)")
        else:
            params["t"] = t
            if t >= 3 and n >= 4 * m + 94:
                checked += 1
                if not second_holds(t, m, n):
                    violations.append(f"second inequality fails at t={t}, m={m}, n={n}")
            else:
                findings.append(f"(t={t}, m={m}, n={n}) outside the second inequality "
                                "domain (needs t >= 3 and n >= 4m + 94)")
    else:
        for nn in range(136, n_cap + 1):
            for mm in range(2, nn // 2 + 1):
                checked += 1
                if not first_holds(mm, nn):
                    violations.append(f"first inequality fails at m={mm}, n={nn}")
        for tt in range(3, t_cap + 1):
            for mm in range(0, m_cap + 1):
                for nn in range(4 * mm + 94, n_cap + 1):
                    checked += 1
                    if not second_holds(tt, mm, nn):
                        violations.append(f"second inequality fails at t={tt}, m={mm}, n={nn}")
    status = "counterexamples" if violations else "verified"
    return SearchReport("obs-calc", params, status, checked=checked,
                        elapsed_ms=_ms(start),
                        findings=tuple(findings + violations),
                        suspect_implementation=bool(violations))
