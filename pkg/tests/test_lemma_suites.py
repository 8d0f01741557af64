"""Deletion-coincidence property suites at their full module ranges.

Exhaustive: equal-deletion properties (three equal deletions sit in one
block; two equal deletions give a semi-homogeneous interval) for n <= 6;
agreement pair properties (symmetric-difference edges pinned to the
agreement interval; three disjoint agreements force equality; four
left-anchored agreements force a block) for n <= 5; small-block type change
and the restricted-shadow bound for n <= 5; the low-excess shadow bound for
n <= 6 with r in {1, 2, 3}; the single-graph shadow floor 2|shadow| >=
n - excess for every graph with n <= 7.

Randomized n = 6 complements each exhaustive range with seeded planted
configurations (shared-core insertions and blocky graphs).
"""

import numpy as np
import pytest

from lemma_helpers import (check_equal_deletions_semi,
                           check_three_equal_deletions, random_pair_checks,
                           random_single_graph_checks, sweep_pair_checks,
                           sweep_single_graph_checks)
from ordshadow._kernels import single_graph_sweep
from ordshadow.graphs import OrderedGraph, pair_count
from ordshadow.tables import deletion_columns, excess_table


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_single_graph_properties_exhaustive(n):
    out = sweep_single_graph_checks(n)
    assert all(v == [] for v in out.values()), out


def test_equal_deletion_properties_n6_exhaustive():
    # prefilter: only graphs with at least one deletion coincidence matter
    n = 6
    cols = deletion_columns(n)
    sorted_cols = np.sort(cols, axis=1)
    has_pair = (np.diff(sorted_cols.astype(np.int64), axis=1) == 0).any(axis=1)
    candidates = np.nonzero(has_pair)[0]
    assert len(candidates) > 1000  # the prefilter keeps a real population
    viol = []
    for mask in candidates:
        g = OrderedGraph(n, int(mask))
        viol.extend(check_three_equal_deletions(g))
        viol.extend(check_equal_deletions_semi(g))
    assert viol == []


def test_low_excess_shadow_n6_exhaustive():
    n = 6
    exc_here = excess_table(n)
    exc_down = excess_table(n - 1)
    cols = deletion_columns(n)
    bad = []
    for g in range(1 << pair_count(n)):
        m = int(exc_here[g])
        shadow = {int(x) for x in cols[g]}
        for r in (1, 2, 3):
            count = sum(1 for h in shadow if exc_down[h] <= m + 2 * r + 1)
            if 2 * r * count < (r - 1) * n - r * m:
                bad.append((g, r))
    assert bad == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pair_properties_exhaustive(n):
    out = sweep_pair_checks(n)
    assert all(v == [] for v in out.values()), out


def test_pair_properties_random_n6():
    out = random_pair_checks(6, 1000, seed=20260)
    assert all(v == [] for v in out.values()), out


def test_single_graph_properties_random_n6():
    out = random_single_graph_checks(6, 1000, seed=20261)
    assert all(v == [] for v in out.values()), out


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_single_graph_shadow_floor(n):
    # 2 |shadow(G)| >= n - excess(G) for every graph on [n]
    checked, violations = single_graph_sweep(n, 0, 1 << pair_count(n))
    assert checked == 1 << pair_count(n)
    assert violations == []
