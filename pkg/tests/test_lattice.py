"""Simplex-lattice sets: shadows, lines, compressions, extremal sets.

Claims covered:
    - |Z^d(n)| = C(n+d-1, d-1) and enumeration is lexicographic
    - shadows step down one unit per positive coordinate; full lines have
      n+1 points and shadows of exactly n
    - compression in direction j lands inside the shadow with one element
      per member positive in j
    - the dichotomy scan finds nothing below size 2n on the feasible grid,
      in both modes, and honors the guard and seed requirements
    - the two extremal sets have size 2n, shadow 2n-1, and no line
    - everything commutes with coordinate permutations
"""

import random
from math import comb

import pytest

from ordshadow.errors import Infeasible, InvalidInput
from ordshadow.lattice import (LatticeSet, extremal_sets, line_points,
                               pack_point, simplex_points, simplex_size,
                               split_range, unpack_point, verify_line_dichotomy)


def test_simplex_enumeration():
    for d in range(1, 6):
        for n in range(0, 9):
            pts = simplex_points(d, n)
            assert len(pts) == simplex_size(d, n) == comb(n + d - 1, d - 1)
            assert list(pts) == sorted(pts)
            assert all(len(p) == d and sum(p) == n and min(p) >= 0 for p in pts)


def test_point_packing_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        d = rng.randint(1, 8)
        p = tuple(rng.randint(0, 255) for _ in range(d))
        assert unpack_point(pack_point(p), d) == p
    with pytest.raises(InvalidInput):
        pack_point((1,) * 9)


def test_shadow_of_singleton():
    a = LatticeSet.from_points(4, 5, [(2, 0, 3, 0)])
    assert set(a.shadow()) == {(1, 0, 3, 0), (2, 0, 2, 0)}
    assert len(LatticeSet.from_points(3, 4, [(4, 0, 0)]).shadow()) == 1


def test_full_line_counts():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(2, 6)
        n = rng.randint(1, 10)
        j = rng.randint(1, d - 1)
        k = rng.randint(j + 1, d)
        line = LatticeSet.line(d, n, j, k)
        assert len(line) == n + 1
        assert len(line.shadow()) == n
        assert line.find_line() == (min(j, k), max(j, k)) or line.find_line() is not None


def test_full_simplex_z2_is_a_line():
    for n in range(1, 8):
        full = LatticeSet.full(2, n)
        assert full.find_line() == (1, 2)
        assert len(full.shadow()) == n


def test_find_line_negative():
    n = 4
    line = line_points(3, n, 1, 2)
    holed = LatticeSet.from_points(3, n, line[1:])
    assert holed.find_line() is None
    assert LatticeSet(3, 4).find_line() is None


def test_compress():
    # no member vanishes in direction 1: compression keeps the full size
    a = LatticeSet.from_points(3, 3, [(1, 2, 0), (2, 1, 0), (1, 1, 1)])
    assert len(a.compress(1)) == len(a)
    # exactly one member has coordinate 1 zero: one element is lost
    b = LatticeSet.from_points(3, 3, [(0, 3, 0), (2, 1, 0), (1, 1, 1)])
    assert len(b.compress(1)) == len(b) - 1
    assert b.compress(1).points == tuple(sorted({(1, 1, 0), (0, 1, 1)}))
    single = LatticeSet.from_points(4, 5, [(5, 0, 0, 0)])
    assert single.compress(1).points == ((4, 0, 0, 0),)
    with pytest.raises(InvalidInput):
        a.compress(4)


def test_compress_inside_shadow_random():
    rng = random.Random(5)
    for _ in range(50):
        d = rng.randint(2, 4)
        n = rng.randint(1, 5)
        pts = rng.sample(simplex_points(d, n), rng.randint(1, simplex_size(d, n)))
        a = LatticeSet.from_points(d, n, pts)
        sh = set(a.shadow())
        for j in range(1, d + 1):
            comp = a.compress(j)
            assert set(comp) <= sh
            assert len(comp) == sum(1 for p in a if p[j - 1] > 0)


def test_shadow_monotone_random():
    rng = random.Random(9)
    for _ in range(40):
        d = rng.randint(2, 4)
        n = rng.randint(1, 5)
        pts = simplex_points(d, n)
        big = rng.sample(pts, rng.randint(1, len(pts)))
        small = rng.sample(big, rng.randint(1, len(big)))
        A = LatticeSet.from_points(d, n, small)
        B = LatticeSet.from_points(d, n, big)
        assert set(A.shadow()) <= set(B.shadow())


def test_coordinate_permutation_equivariance():
    rng = random.Random(13)
    for _ in range(40):
        d = rng.randint(2, 4)
        n = rng.randint(1, 5)
        pts = rng.sample(simplex_points(d, n), rng.randint(1, simplex_size(d, n)))
        perm = list(range(d))
        rng.shuffle(perm)

        def apply(p):
            return tuple(p[perm[i]] for i in range(d))

        A = LatticeSet.from_points(d, n, pts)
        B = LatticeSet.from_points(d, n, map(apply, pts))
        assert set(B.shadow()) == {apply(p) for p in A.shadow()}
        assert (A.find_line() is None) == (B.find_line() is None)
        for j in range(1, d + 1):
            assert set(B.compress(j)) == {apply(p) for p in A.compress(perm[j - 1] + 1)}


def test_dichotomy_exhaustive_small():
    # d = 2 is trivially clean: every subset sits inside the unique line
    rep = verify_line_dichotomy(2, 3)
    assert rep["violations"] == [] and rep["lower_bound_violations"] == []
    rep = verify_line_dichotomy(3, 3)
    assert rep["violations"] == [] and rep["lower_bound_violations"] == []
    assert rep["checked"] == sum(comb(10, s) for s in range(1, 6))


def test_dichotomy_guard_and_seed():
    with pytest.raises(Infeasible):
        verify_line_dichotomy(4, 5)  # 56 points > 24-point guard
    with pytest.raises(InvalidInput):
        verify_line_dichotomy(3, 3, mode="random")  # seed mandatory
    with pytest.raises(InvalidInput):
        verify_line_dichotomy(3, 3, mode="sideways")


def test_dichotomy_randomized_replays():
    a = verify_line_dichotomy(3, 4, mode="random", trials=30, seed=42)
    b = verify_line_dichotomy(3, 4, mode="random", trials=30, seed=42)
    assert a["seed"] == 42 and a["violations"] == []
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_extremal_sets():
    for n in range(2, 9):
        for a in extremal_sets(n):
            assert len(a) == 2 * n
            assert len(a.shadow()) == 2 * n - 1
            assert a.find_line() is None
    a1, _ = extremal_sets(5)
    assert all(p[2] <= 1 for p in a1)
    with pytest.raises(InvalidInput):
        extremal_sets(1)


def test_lattice_set_json_round_trip():
    a = LatticeSet.from_points(3, 4, [(1, 1, 2), (0, 4, 0), (4, 0, 0)])
    assert LatticeSet.from_json_dict(a.to_json_dict()) == a
    with pytest.raises(InvalidInput):
        LatticeSet.from_json_dict({"d": 2, "points": []})
    with pytest.raises(InvalidInput):
        LatticeSet.from_points(2, 3, [(1, 1)])


def test_split_range():
    assert split_range(10, 3) == [(0, 3), (3, 6), (6, 10)]
    assert split_range(2, 5) == [(0, 1), (1, 2)]
    assert split_range(0, 4) == [(0, 0)]
    with pytest.raises(InvalidInput):
        split_range(5, 0)
