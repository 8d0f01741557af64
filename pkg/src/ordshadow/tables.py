"""Vectorised per-graph tables over all 2^C(n,2) ordered graphs on [n].

The search layer feeds these to the scan kernels: for every edge mask g the
tables hold the shadow as a word-array bitset over the edge masks of [n-1],
the shadow size, and the excess. Everything is built with numpy gather
tricks in one pass; n is capped at 6 because the bitset width doubles with
every pair (n = 6 already means 32768 graphs x 1024-bit shadows).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Infeasible
from .graphs import pair_count

TABLE_MAX_N = 6


def deletion_columns(n: int) -> np.ndarray:
    """(2^C(n,2), n) array: column v is the edge mask of G - (v+1)."""
    if not (1 <= n <= 7):
        raise Infeasible(f"deletion table needs 1 <= n <= 7, got {n}")
    N = 1 << pair_count(n)
    gs = np.arange(N, dtype=np.uint32)
    cols = np.empty((N, n), dtype=np.uint32)
    for v0 in range(n):
        col = np.zeros(N, dtype=np.uint32)
        t = 0
        for b in range(1, n - 1):
            for a in range(b):
                oa = a + (a >= v0)
                ob = b + (b >= v0)
                old = ob * (ob - 1) // 2 + oa
                col |= ((gs >> np.uint32(old)) & np.uint32(1)) << np.uint32(t)
                t += 1
        cols[:, v0] = col
    return cols


def excess_table(n: int) -> np.ndarray:
    """Excess of every graph on [n], indexed by edge mask."""
    if not (1 <= n <= 7):
        raise Infeasible(f"excess table needs 1 <= n <= 7, got {n}")
    N = 1 << pair_count(n)
    gs = np.arange(N, dtype=np.uint32)
    rows = []
    for u in range(n):
        row = np.zeros(N, dtype=np.uint32)
        for w in range(n):
            if w == u:
                continue
            a, b = min(u, w), max(u, w)
            idx = b * (b - 1) // 2 + a
            row |= ((gs >> np.uint32(idx)) & np.uint32(1)) << np.uint32(w)
        rows.append(row)
    split = np.zeros((N, n + 1), dtype=bool)
    split[:, 0] = True
    split[:, n] = True
    for u in range(n - 1):
        left = rows[u] & ~np.uint32(1 << (u + 1))
        right = rows[u + 1] & ~np.uint32(1 << u)
        split[:, u + 1] = left != right
    nblocks = split[:, 1:].sum(axis=1)
    singles = np.zeros(N, dtype=np.int64)
    for u in range(n):
        singles += (split[:, u] & split[:, u + 1]).astype(np.int64)
    return n - (2 * nblocks - singles)


@dataclass(frozen=True)
class GraphTables:
    n: int
    masks: np.ndarray        # (N, W) uint64 shadow bitsets over graphs on [n-1]
    shadow_sizes: np.ndarray  # (N,) int64
    excesses: np.ndarray      # (N,) int64


@lru_cache(maxsize=None)
def graph_tables(n: int) -> GraphTables:
    if not (2 <= n <= TABLE_MAX_N):
        raise Infeasible(
            f"whole-level graph tables are limited to 2 <= n <= {TABLE_MAX_N}, got {n}")
    N = 1 << pair_count(n)
    cols = deletion_columns(n)
    bits = 1 << pair_count(n - 1)
    W = max(1, (bits + 63) // 64)
    masks = np.zeros((N, W), dtype=np.uint64)
    rows = np.arange(N)
    for v0 in range(n):
        d = cols[:, v0].astype(np.int64)
        np.bitwise_or.at(masks, (rows, d >> 6), np.uint64(1) << (d & 63).astype(np.uint64))
    sorted_cols = np.sort(cols, axis=1)
    shadow_sizes = 1 + np.count_nonzero(np.diff(sorted_cols.astype(np.int64), axis=1), axis=1)
    return GraphTables(n, masks, shadow_sizes.astype(np.int64), excess_table(n))


def mask_rows_for(masks: np.ndarray, indices) -> np.ndarray:
    """Contiguous uint64 sub-table for the given candidate indices."""
    return np.ascontiguousarray(masks[np.asarray(indices, dtype=np.int64)])


def union_shadow_size(masks: np.ndarray, indices) -> int:
    """Popcount of the union of the given rows."""
    if len(indices) == 0:
        return 0
    rows = masks[np.asarray(indices, dtype=np.int64)]
    return int(np.bitwise_count(np.bitwise_or.reduce(rows, axis=0)).sum())
