# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset-scan kernels.

Byte-for-byte equivalent to ordshadow._pykernels: identical traversal order,
counters, budgets, and canonical output ordering. See that module for the
semantics of each entry point.
"""

import numpy as np

from ordshadow.errors import Infeasible

BACKEND_NAME = "compiled"

from libc.stdint cimport int64_t, uint32_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount_words(uint64_t[:, ::1] rows, Py_ssize_t r, int W) nogil:
    cdef int w, pc = 0
    for w in range(W):
        pc += __builtin_popcountll(rows[r, w])
    return pc


def subset_dichotomy_scan(shadow_masks, line_masks, size_cap, lo, hi):
    cdef uint64_t[::1] sm = np.ascontiguousarray(shadow_masks, dtype=np.uint64)
    cdef uint64_t[::1] lm = np.ascontiguousarray(line_masks, dtype=np.uint64) \
        if len(line_masks) else np.zeros(0, dtype=np.uint64)
    cdef int M = sm.shape[0]
    cdef int L = lm.shape[0]
    cdef int cap = size_cap
    cdef long long checked = 0
    cdef int d, size, t
    cdef long i, lim
    cdef uint64_t sh2, sub2
    dich = []
    bound = []
    if cap <= 0 or lo >= hi or M == 0:
        return 0, [], []

    pos_np = np.zeros(cap, dtype=np.int64)
    subs_np = np.zeros(cap + 1, dtype=np.uint64)
    shs_np = np.zeros(cap + 1, dtype=np.uint64)
    cdef int64_t[::1] pos = pos_np
    cdef uint64_t[::1] subs = subs_np
    cdef uint64_t[::1] shs = shs_np
    cdef bint has_line

    d = 0
    pos[0] = lo
    while d >= 0:
        i = pos[d]
        lim = hi if d == 0 else M
        if i >= lim:
            d -= 1
            if d >= 0:
                pos[d] += 1
            continue
        sub2 = subs[d] | ((<uint64_t> 1) << i)
        sh2 = shs[d] | sm[i]
        checked += 1
        size = d + 1
        if __builtin_popcountll(sh2) < size:
            has_line = False
            for t in range(L):
                if (sub2 & lm[t]) == lm[t]:
                    has_line = True
                    break
            if not has_line:
                dich.append(int(sub2))
        if __builtin_popcountll(sh2) < size - 1:
            bound.append(int(sub2))
        if size < cap:
            subs[d + 1] = sub2
            shs[d + 1] = sh2
            d += 1
            pos[d] = i + 1
        else:
            pos[d] += 1
    dich.sort()
    bound.sort()
    return checked, dich, bound


def deficiency_scan(masks, max_size, slack, lo, hi, collect_cap):
    cdef uint64_t[:, ::1] mv = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef Py_ssize_t N = mv.shape[0]
    cdef int W = mv.shape[1]
    cdef int cap = max_size
    cdef int slk = slack
    cdef long long checked = 0, pruned = 0
    cdef int d, w, size, pc
    cdef Py_ssize_t i, lim
    out = []
    if cap <= 0 or lo >= hi or N == 0:
        return 0, 0, []

    sh_np = np.zeros((cap + 1, W), dtype=np.uint64)
    pos_np = np.zeros(cap, dtype=np.int64)
    chosen_np = np.zeros(cap, dtype=np.int64)
    cdef uint64_t[:, ::1] sh = sh_np
    cdef int64_t[::1] pos = pos_np
    cdef int64_t[::1] chosen = chosen_np

    d = 0
    pos[0] = lo
    while d >= 0:
        i = pos[d]
        lim = hi if d == 0 else N
        if i >= lim:
            d -= 1
            if d >= 0:
                pos[d] += 1
            continue
        pc = 0
        for w in range(W):
            sh[d + 1, w] = sh[d, w] | mv[i, w]
            pc += __builtin_popcountll(sh[d + 1, w])
        checked += 1
        chosen[d] = i
        size = d + 1
        if pc < size - slk:
            out.append(tuple(int(chosen[t]) for t in range(size)))
            if len(out) > collect_cap:
                raise Infeasible(f"more than {collect_cap} deficient families collected")
        if size < cap:
            if pc < cap - slk:
                d += 1
                pos[d] = i + 1
            else:
                pruned += 1
                pos[d] += 1
        else:
            pos[d] += 1
    out.sort()
    return checked, pruned, out


def min_shadow_scan(masks, t, lo, hi, best0, node_budget):
    cdef uint64_t[:, ::1] mv = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef Py_ssize_t N = mv.shape[0]
    cdef int W = mv.shape[1]
    cdef int depth_cap = t
    cdef long long best = best0
    cdef long long checked = 0, pruned = 0, budget = node_budget
    cdef bint complete = True
    cdef int d, w, size, pc
    cdef Py_ssize_t i, lim
    witness = None
    if depth_cap <= 0 or lo >= hi or N == 0:
        return int(best), None, 0, 0, True

    sh_np = np.zeros((depth_cap + 1, W), dtype=np.uint64)
    pos_np = np.zeros(depth_cap, dtype=np.int64)
    chosen_np = np.zeros(depth_cap, dtype=np.int64)
    cdef uint64_t[:, ::1] sh = sh_np
    cdef int64_t[::1] pos = pos_np
    cdef int64_t[::1] chosen = chosen_np

    d = 0
    pos[0] = lo
    while d >= 0:
        i = pos[d]
        lim = hi if d == 0 else N
        if i >= lim:
            d -= 1
            if d >= 0:
                pos[d] += 1
            continue
        if checked >= budget:
            complete = False
            break
        pc = 0
        for w in range(W):
            sh[d + 1, w] = sh[d, w] | mv[i, w]
            pc += __builtin_popcountll(sh[d + 1, w])
        checked += 1
        size = d + 1
        if size == depth_cap:
            if pc < best:
                best = pc
                chosen[d] = i
                witness = tuple(int(chosen[w]) for w in range(size))
            pos[d] += 1
        else:
            if pc >= best:
                pruned += 1
                pos[d] += 1
            else:
                chosen[d] = i
                d += 1
                pos[d] = i + 1
    return int(best), witness, checked, pruned, complete


def difftypes_scan(masks, excesses, n, t_max, lo, hi):
    cdef uint64_t[:, ::1] mv = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int64_t[::1] exc = np.ascontiguousarray(excesses, dtype=np.int64)
    cdef Py_ssize_t N = mv.shape[0]
    cdef int W = mv.shape[1]
    cdef int cap = t_max
    cdef int nn = n
    cdef long long checked = 0
    cdef int d, w, s, pc
    cdef int64_t e, lhs, rhs
    cdef Py_ssize_t i, lim
    out = []
    if cap <= 0 or lo >= hi or N == 0:
        return 0, []

    sh_np = np.zeros((cap + 1, W), dtype=np.uint64)
    mx_np = np.zeros(cap + 1, dtype=np.int64)
    pos_np = np.zeros(cap, dtype=np.int64)
    chosen_np = np.zeros(cap, dtype=np.int64)
    cdef uint64_t[:, ::1] sh = sh_np
    cdef int64_t[::1] mx = mx_np
    cdef int64_t[::1] pos = pos_np
    cdef int64_t[::1] chosen = chosen_np

    d = 0
    pos[0] = lo
    while d >= 0:
        i = pos[d]
        lim = hi if d == 0 else N
        if i >= lim:
            d -= 1
            if d >= 0:
                pos[d] += 1
            continue
        pc = 0
        for w in range(W):
            sh[d + 1, w] = sh[d, w] | mv[i, w]
            pc += __builtin_popcountll(sh[d + 1, w])
        mx[d + 1] = exc[i] if exc[i] > mx[d] else mx[d]
        checked += 1
        chosen[d] = i
        s = d + 1
        e = mx[d + 1]
        lhs = (<int64_t> pc) * (2 * (nn - e) + 32 * s)
        rhs = (<int64_t> s) * (nn - e) * (nn - e)
        if lhs < rhs:
            out.append(tuple(int(chosen[w]) for w in range(s)))
        if s < cap:
            d += 1
            pos[d] = i + 1
        else:
            pos[d] += 1
    out.sort()
    return checked, out


def single_graph_sweep(n, lo, hi):
    cdef int nn = n
    if nn < 1 or nn > 12:
        raise ValueError("single_graph_sweep supports 1 <= n <= 12")
    cdef int Q = (nn - 1) * (nn - 2) // 2
    cdef int v0, a, b, oa, ob, t, u, w
    # deletion gather maps: old pair index for bit t of G - v
    dmap_np = np.zeros((nn, max(Q, 1)), dtype=np.int32)
    for v0 in range(nn):
        t = 0
        for b in range(1, nn - 1):
            for a in range(b):
                oa = a + (a >= v0)
                ob = b + (b >= v0)
                dmap_np[v0, t] = ob * (ob - 1) // 2 + oa
                t += 1
    cdef int[:, ::1] dmap = dmap_np

    cdef uint64_t g
    cdef uint64_t lo_c = lo, hi_c = hi
    cdef uint32_t dels[12]
    cdef uint32_t rows[12]
    cdef bint split[13]
    cdef uint32_t dv
    cdef int s, nblocks, singles, m, idx
    out = []
    for g in range(lo_c, hi_c):
        # distinct single-vertex deletions
        s = 0
        for v0 in range(nn):
            dv = 0
            for t in range(Q):
                dv |= ((g >> dmap[v0, t]) & 1) << t
            dels[v0] = dv
        for v0 in range(nn):
            t = 1
            for u in range(v0):
                if dels[u] == dels[v0]:
                    t = 0
                    break
            s += t
        # excess from the block structure
        for u in range(nn):
            rows[u] = 0
            for w in range(nn):
                if w == u:
                    continue
                a = u if u < w else w
                b = w if u < w else u
                idx = b * (b - 1) // 2 + a
                rows[u] |= ((<uint32_t> (g >> idx)) & 1) << w
        split[0] = True
        split[nn] = True
        for u in range(nn - 1):
            split[u + 1] = (rows[u] & ~((<uint32_t> 1) << (u + 1))) != \
                           (rows[u + 1] & ~((<uint32_t> 1) << u))
        nblocks = 0
        for u in range(1, nn + 1):
            if split[u]:
                nblocks += 1
        singles = 0
        for u in range(nn):
            if split[u] and split[u + 1]:
                singles += 1
        m = nn - (2 * nblocks - singles)
        if 2 * s < nn - m:
            out.append(int(g))
    return hi - lo, out
