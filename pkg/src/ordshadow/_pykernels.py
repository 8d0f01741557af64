"""Pure-Python implementations of the hot enumeration kernels.

These mirror ordshadow._ckernels bit for bit: same traversal order, same
counters, same canonical (sorted) violation lists, so reports are identical
whichever backend is active. Shadow masks are handled as numpy uint64 word
arrays of shape (N, W); the inner subset walks vectorise the leaf level and
fall back to per-node recursion above it.

Traversal contract shared with the compiled backend: subsets are enumerated
as ascending index combinations, depth-first; the root level is restricted
to first elements in [lo, hi) so searches can be partitioned; node budgets
are exact (a run visits at most `node_budget` nodes and reports itself
incomplete if anything was left).
"""

from __future__ import annotations

import numpy as np

from .errors import Infeasible

BACKEND_NAME = "python"

_U1 = np.uint64(1)


def _popcounts(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block).sum(axis=1, dtype=np.int64)


def subset_dichotomy_scan(shadow_masks, line_masks, size_cap, lo, hi):
    """Walk all subsets A of [M] with 1 <= |A| <= size_cap (first element in
    [lo, hi)), tracking the union of per-point shadow masks.

    Returns (checked, dichotomy_violations, lower_bound_violations); a subset
    violates the dichotomy when its shadow is smaller than itself and it
    contains none of the given line masks, and violates the lower bound when
    its shadow is smaller than |A| - 1. Violations are subset bitmasks over
    [M], sorted ascending.
    """
    M = len(shadow_masks)
    sm = [int(x) for x in shadow_masks]
    lines = [int(x) for x in line_masks]
    checked = 0
    dich: list[int] = []
    bound: list[int] = []

    def rec(sub: int, sh: int, start: int, depth: int, limit: int) -> None:
        nonlocal checked
        for i in range(start, limit):
            sub2 = sub | (1 << i)
            sh2 = sh | sm[i]
            checked += 1
            size = depth + 1
            pc = sh2.bit_count()
            if pc < size and not any(sub2 & L == L for L in lines):
                dich.append(sub2)
            if pc < size - 1:
                bound.append(sub2)
            if size < size_cap:
                rec(sub2, sh2, i + 1, size, M)

    if size_cap > 0 and lo < hi:
        rec(0, 0, lo, 0, hi)
    return checked, sorted(dich), sorted(bound)


def deficiency_scan(masks, max_size, slack, lo, hi, collect_cap):
    """Walk all families of size 1..max_size (ascending index combinations,
    first member in [lo, hi)) and collect every family whose shadow union has
    fewer than (size - slack) elements.

    A subtree is pruned once the running shadow reaches max_size - slack
    members, since shadows only grow along a branch. Returns
    (checked, pruned, deficient) with deficient a sorted list of index tuples.
    """
    N, W = masks.shape
    checked = 0
    pruned = 0
    out: list[tuple[int, ...]] = []
    threshold = max_size - slack

    def rec(prefix_or: np.ndarray, start: int, limit: int, depth: int,
            chosen: tuple[int, ...]) -> None:
        nonlocal checked, pruned
        if start >= limit:
            return
        block = masks[start:limit] | prefix_or
        pcs = _popcounts(block)
        checked += limit - start
        size = depth + 1
        for off in np.nonzero(pcs < size - slack)[0]:
            out.append(chosen + (start + int(off),))
            if len(out) > collect_cap:
                raise Infeasible(f"more than {collect_cap} deficient families collected")
        if size < max_size:
            viable = np.nonzero(pcs < threshold)[0]
            pruned += (limit - start) - len(viable)
            for off in viable:
                i = start + int(off)
                rec(block[off], i + 1, N, size, chosen + (i,))

    if max_size > 0 and lo < hi:
        rec(np.zeros(W, dtype=np.uint64), lo, hi, 0, ())
    return checked, pruned, sorted(out)


def min_shadow_scan(masks, t, lo, hi, best0, node_budget):
    """Branch-and-bound minimum of the shadow union over families of size
    exactly t. Returns (best, witness, checked, pruned, complete); witness is
    None when nothing beat best0. Visits at most node_budget nodes.
    """
    N, W = masks.shape
    state = {"best": int(best0), "witness": None, "checked": 0, "pruned": 0,
             "complete": True}

    def rec(prefix_or: np.ndarray, start: int, limit: int, depth: int,
            chosen: tuple[int, ...]) -> bool:
        if start >= limit:
            return True
        remaining = node_budget - state["checked"]
        if remaining <= 0:
            state["complete"] = False
            return False
        size = depth + 1
        if size == t:
            use = min(limit - start, remaining)
            block = masks[start:start + use] | prefix_or
            pcs = _popcounts(block)
            state["checked"] += use
            mn = int(pcs.min())
            if mn < state["best"]:
                state["best"] = mn
                state["witness"] = chosen + (start + int(np.argmin(pcs)),)
            if use < limit - start:
                state["complete"] = False
                return False
            return True
        block = masks[start:limit] | prefix_or
        pcs = _popcounts(block)
        for off in range(limit - start):
            if state["checked"] >= node_budget:
                state["complete"] = False
                return False
            state["checked"] += 1
            if pcs[off] >= state["best"]:
                state["pruned"] += 1
                continue
            i = start + off
            if not rec(block[off], i + 1, N, size, chosen + (i,)):
                return False
        return True

    if t > 0 and lo < hi:
        rec(np.zeros(W, dtype=np.uint64), lo, hi, 0, ())
    return (state["best"], state["witness"], state["checked"], state["pruned"],
            state["complete"])


def difftypes_scan(masks, excesses, n, t_max, lo, hi):
    """Check every family of size 1..t_max against the joint-shadow lower
    bound  |shadow| >= s (n-e)^2 / (2(n-e) + 32 s)  where s is the family
    size and e the largest member excess. All comparisons are integer
    cross-multiplications. Returns (checked, violations) with violations a
    sorted list of index tuples.
    """
    N, W = masks.shape
    exc = np.asarray(excesses, dtype=np.int64)
    checked = 0
    out: list[tuple[int, ...]] = []

    def rec(prefix_or: np.ndarray, prefix_exc: int, start: int, limit: int,
            depth: int, chosen: tuple[int, ...]) -> None:
        nonlocal checked
        if start >= limit:
            return
        block = masks[start:limit] | prefix_or
        pcs = _popcounts(block)
        es = np.maximum(exc[start:limit], prefix_exc)
        checked += limit - start
        s = depth + 1
        lhs = pcs * (2 * (n - es) + 32 * s)
        rhs = s * (n - es) ** 2
        for off in np.nonzero(lhs < rhs)[0]:
            out.append(chosen + (start + int(off),))
        if s < t_max:
            for off in range(limit - start):
                i = start + off
                rec(block[off], int(es[off]), i + 1, N, s, chosen + (i,))

    if t_max > 0 and lo < hi:
        rec(np.zeros(W, dtype=np.uint64), 0, lo, hi, 0, ())
    return checked, sorted(out)


def single_graph_sweep(n, lo, hi):
    """Sweep the edge masks in [lo, hi) of graphs on [n], checking that the
    number of distinct single-vertex deletions s and the excess m satisfy
    2 s >= n - m. Returns (checked, violations) with violations the sorted
    list of offending edge masks.
    """
    P = n * (n - 1) // 2
    Q = (n - 1) * (n - 2) // 2
    violations: list[int] = []
    chunk = 1 << 18
    for base in range(lo, hi, chunk):
        top = min(base + chunk, hi)
        gs = np.arange(base, top, dtype=np.uint32)

        # distinct deletions: build the edge mask of G - v for every v
        dels = np.empty((len(gs), n), dtype=np.uint32)
        for v0 in range(n):
            col = np.zeros(len(gs), dtype=np.uint32)
            t = 0
            for b in range(1, n - 1):
                for a in range(b):
                    oa = a + (a >= v0)
                    ob = b + (b >= v0)
                    old = ob * (ob - 1) // 2 + oa
                    col |= ((gs >> np.uint32(old)) & np.uint32(1)) << np.uint32(t)
                    t += 1
            assert t == Q
            dels[:, v0] = col
        dels.sort(axis=1)
        s = 1 + np.count_nonzero(np.diff(dels, axis=1), axis=1)

        # excess via block boundaries of the adjacency rows
        rows = []
        for u in range(n):
            row = np.zeros(len(gs), dtype=np.uint32)
            for w in range(n):
                if w == u:
                    continue
                a, b = min(u, w), max(u, w)
                idx = b * (b - 1) // 2 + a
                row |= ((gs >> np.uint32(idx)) & np.uint32(1)) << np.uint32(w)
            rows.append(row)
        split = np.zeros((len(gs), n + 1), dtype=bool)
        split[:, 0] = True
        split[:, n] = True
        for u in range(n - 1):
            left = rows[u] & ~np.uint32(1 << (u + 1))
            right = rows[u + 1] & ~np.uint32(1 << u)
            split[:, u + 1] = left != right
        nblocks = split[:, 1:].sum(axis=1)
        singles = np.zeros(len(gs), dtype=np.int64)
        for u in range(n):
            singles += (split[:, u] & split[:, u + 1]).astype(np.int64)
        m = n - (2 * nblocks - singles)

        bad = np.nonzero(2 * s < n - m)[0]
        violations.extend(int(gs[i]) for i in bad)
    return hi - lo, sorted(violations)
