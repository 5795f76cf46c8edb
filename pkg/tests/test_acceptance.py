"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a pass/fail line per
criterion in the terminal summary.
"""

import random
import time
from itertools import combinations

import pytest

from capflat.catalan import catalan, enumerate_arc_systems, recurrence_holds
from capflat.diagram import PointClass, WeightFunction, classify_point, is_zigzag, tally
from capflat.moves import (
    HALF,
    Step,
    decomposition_counts,
    flat_oracle,
    flat_recursive,
    legal_move_indices,
)
from capflat.verify import run_sweep, sweep_space

W = WeightFunction.of
RANKS = range(1, 6)
CATALAN_MAXIMA = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132}


def window_for(r):
    return 2 * r + 6


def best_of(fn, repeats=20):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@pytest.fixture(scope="module")
def sweeps():
    """Sweep reports per rank; oracle on every f for r <= 4 and on 200 sampled f at r = 5."""
    reports, timings = {}, {}
    for r in RANKS:
        start = time.perf_counter()
        reports[r] = run_sweep(r, window_for(r), oracle_sample=None if r <= 4 else 200, seed=2024)
        timings[r] = time.perf_counter() - start
    return reports, timings


def sweep(r):
    return list(sweep_space(r, window_for(r)))


@pytest.mark.criterion(1, "worked example flat(2,4) with decomposition sizes 2/2/1, < 1 ms")
def test_worked_example():
    def compute():
        flat_recursive.cache_clear()
        d = flat_recursive(W(2, 4))
        return d, d.members

    d, members = compute()
    assert set(members) == {W(1, 3), W(1, 4), W(1, 2), W(2, 4), W(2, 3)}
    assert len(members) == 5
    sizes = {idx: size for idx, size, _, _ in decomposition_counts(d)}
    assert sizes == {HALF: 2, Step(1): 2, Step(2): 1}
    assert best_of(compute) < 1e-3


@pytest.mark.criterion(2, "tally of (1,2,3,7,9) on 0..9 is 0,1,2,3,2,1,0,1,0,1, < 1 ms")
def test_tally_reproduction():
    f = W(1, 2, 3, 7, 9)
    assert tally(f, (0, 9)).values == (0, 1, 2, 3, 2, 1, 0, 1, 0, 1)
    assert best_of(lambda: tally(f, (0, 9))) < 1e-3


@pytest.mark.criterion(3, "max |flat f| = C_{r+1} attained only at (2,4,...,2r), r = 1..5, r = 5 under 2 min")
def test_catalan_upper_bound(sweeps):
    reports, timings = sweeps
    for r in RANKS:
        rep = reports[r]
        assert rep.complete and rep.tested == len(sweep(r))
        assert rep.max_flat == catalan(r + 1) == CATALAN_MAXIMA[r]
        assert rep.extremal == [list(range(2, 2 * r + 1, 2))]
        for f in sweep(r):
            assert len(flat_recursive(f)) <= catalan(r + 1)
    assert timings[5] < 120


@pytest.mark.criterion(4, "|LM* f| <= r+1 with equality exactly on zigzag f")
def test_move_index_bound():
    for r in RANKS:
        for f in sweep(r):
            count = len(legal_move_indices(f))
            assert count <= r + 1
            assert (count == r + 1) == is_zigzag(f)


@pytest.mark.criterion(5, "|flat f| >= r+1 with equality exactly at (1,...,r) up to shift")
def test_lower_bound(sweeps):
    reports, _ = sweeps
    for r in RANKS:
        for f in sweep(r):
            n = len(flat_recursive(f))
            assert n >= r + 1
            assert (n == r + 1) == (f.entries == tuple(range(r + 1, 2 * r + 1)))
        assert reports[r].minimal == [list(range(r + 1, 2 * r + 1))]


@pytest.mark.criterion(6, "recursion equals brute force on all r <= 4 sweeps and 200 random f at r = 5")
def test_oracle_equivalence(sweeps):
    reports, _ = sweeps
    for r in range(1, 5):
        for f in sweep(r):
            assert set(flat_recursive(f).members) == set(flat_oracle(f))
        assert reports[r].oracle_checked == reports[r].tested
    sample = random.Random(5).sample(sweep(5), 200)
    for f in sample:
        assert set(flat_recursive(f).members) == set(flat_oracle(f))
    assert reports[5].oracle_checked == 200
    assert all(not rep.violations for rep in reports.values())


@pytest.mark.criterion(7, "fundamental recurrence for n <= 15; |A_n| = C_n for n <= 8, C_8 in < 1 s")
def test_catalan_identities():
    for n in range(16):
        assert recurrence_holds(n)
        assert catalan(n + 1) == sum(catalan(n - i + 1) * catalan(i - 1) for i in range(1, n + 2))
    for n in range(8):
        assert len(enumerate_arc_systems(n)) == catalan(n)
    start = time.perf_counter()
    systems = enumerate_arc_systems(8)
    elapsed = time.perf_counter() - start
    assert len(systems) == catalan(8) == 1430
    assert elapsed < 1.0


@pytest.mark.criterion(8, "crosses at maxima/up-slopes and dots at minima/down-slopes on [a_1-1, a_r)")
def test_partition_law():
    for r in range(1, 5):
        for f in sweep(r):
            t = tally(f)
            for c in range(f.entries[0] - 1, f.anchor):
                kind = classify_point(t, c)
                if c in f:
                    assert kind in (PointClass.LOCAL_MAX, PointClass.SLOPE_UP), (f, c)
                else:
                    assert kind in (PointClass.LOCAL_MIN, PointClass.SLOPE_DOWN), (f, c)


@pytest.mark.criterion(9, "left factor <= C_{r-i+1} and under factor <= C_{i-1} in every decomposition")
def test_factor_bounds():
    for r in RANKS:
        for f in sweep(r):
            for idx, size, left, under in decomposition_counts(flat_recursive(f)):
                if idx is HALF:
                    continue
                assert left <= catalan(r - idx.i + 1), (f, idx)
                assert under <= catalan(idx.i - 1), (f, idx)
                assert size == left * under


@pytest.mark.criterion(10, "brute-force output unchanged when its window grows by 5 each side, r <= 3")
def test_window_stability():
    for r in range(1, 4):
        for f in sweep(r):
            assert flat_oracle(f) == flat_oracle(f, pad=5)
