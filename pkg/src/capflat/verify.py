"""Exhaustive sweeps over weight functions of a fixed rank.

Every weight function is checked against the Catalan upper bound, the
``r + 1`` bound on legal move indices, the ``r + 1`` lower bound on the
matching set, the structure of the recursive decomposition and, where
requested, the brute-force oracle.

Sweeps pin the anchor at ``a_r = 2r``. All statements are invariant under
shifting, so this loses nothing.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .catalan import catalan
from .diagram import (
    PointClass,
    WeightFunction,
    build_cap_diagram,
    classify_point,
    is_zigzag,
    tally,
)
from .moves import (
    HALF,
    factor_bounds,
    flat_oracle,
    flat_recursive,
    legal_move_indices,
    move_target,
)

DEFAULT_MAX_RANK = 5
DEFAULT_ORACLE_SAMPLE = 200

SHIFT_NOTE = "anchor pinned at a_r = 2r; results hold up to shift"


def sweep_space(rank: int, window: int) -> Iterator[WeightFunction]:
    """All ``f`` of the given rank with ``a_r = 2 rank`` and ``a_1 >= 2 rank - window``."""
    a = 2 * rank
    for rest in combinations(range(a - window, a), rank - 1):
        yield WeightFunction(rest + (a,))


def is_consecutive(f: WeightFunction) -> bool:
    return f.entries[-1] - f.entries[0] == f.rank - 1


def check_partition(f: WeightFunction) -> list[str]:
    """Crosses sit at maxima or up-slopes of the tally and dots at minima or down-slopes."""
    t = tally(f)
    problems = []
    for c in range(f.entries[0] - 1, f.anchor):
        kind = classify_point(t, c)
        up = kind in (PointClass.LOCAL_MAX, PointClass.SLOPE_UP)
        if up != (c in f):
            problems.append(f"{f}: point {c} classified {kind.value} but f({c}) = {f(c)}")
    return problems


def check_decomposition(f: WeightFunction) -> list[str]:
    """Structural checks on the recursive decomposition of a nonempty ``f``."""
    d = flat_recursive(f)
    r, a = f.rank, f.anchor
    problems = []
    seen: set[WeightFunction] = set()
    for p in d.pieces:
        if seen & p.members:
            problems.append(f"{f}: piece {p.index.key} overlaps an earlier piece")
        seen |= p.members
        if p.index is HALF:
            below = flat_recursive(f.without_anchor())
            if p.size != len(below):
                problems.append(f"{f}: half piece has {p.size} members, expected {len(below)}")
            for g in p.members:
                if g.anchor != a or (a, a + 1) not in {tuple(c) for c in build_cap_diagram(g)}:
                    problems.append(f"{f}: half member {g} lacks the cap ({a}, {a + 1})")
            continue
        b = move_target(a, p.index)
        for g in p.members:
            if (b, a) not in {tuple(c) for c in build_cap_diagram(g)}:
                problems.append(f"{f}: member {g} of {p.index.key} lacks the cap ({b}, {a})")
        if p.size != p.left_size * p.under_size:
            problems.append(f"{f}: {p.index.key} size {p.size} != {p.left_size} x {p.under_size}")
        left_cap, under_cap = factor_bounds(f, p.index)
        if p.left_size > left_cap or p.under_size > under_cap:
            problems.append(
                f"{f}: {p.index.key} factors {p.left_size} x {p.under_size} exceed "
                f"C_{r - p.index.i + 1} x C_{p.index.i - 1} = {left_cap} x {under_cap}"
            )
    if len(seen) != len(d):
        problems.append(f"{f}: union of pieces has {len(seen)} members, sum of sizes {len(d)}")
    return problems


@dataclass
class Outcome:
    f: tuple[int, ...]
    size: int
    moves: int
    oracle_checked: bool
    violations: list[str]


def check_one(f: WeightFunction, with_oracle: bool) -> Outcome:
    r = f.rank
    d = flat_recursive(f)
    size = len(d)
    moves = len(legal_move_indices(f))
    zig = is_zigzag(f)
    problems = []
    if size > catalan(r + 1) or (size == catalan(r + 1)) != zig:
        problems.append(f"{f}: |flat f| = {size} vs C_{r + 1} = {catalan(r + 1)}, zigzag={zig}")
    if moves > r + 1 or (moves == r + 1) != zig:
        problems.append(f"{f}: |LM* f| = {moves} vs r + 1 = {r + 1}, zigzag={zig}")
    if size < r + 1 or (size == r + 1) != is_consecutive(f):
        problems.append(f"{f}: |flat f| = {size} vs lower bound {r + 1}, consecutive={is_consecutive(f)}")
    problems += check_decomposition(f)
    problems += check_partition(f)
    if with_oracle and set(flat_oracle(f)) != set(d.members):
        problems.append(f"{f}: recursive and brute-force matching sets differ")
    return Outcome(f.entries, size, moves, with_oracle, problems)


def _check_batch(batch: list[tuple[tuple[int, ...], bool]]) -> list[Outcome]:
    return [check_one(WeightFunction(e), o) for e, o in batch]


@dataclass
class SweepReport:
    rank: int
    window: int
    tested: int = 0
    oracle_checked: int = 0
    max_flat: int = 0
    catalan_bound: int = 0
    extremal: list[list[int]] = field(default_factory=list)
    min_flat: int = 0
    minimal: list[list[int]] = field(default_factory=list)
    max_moves: int = 0
    violations: list[str] = field(default_factory=list)
    complete: bool = True
    note: str = SHIFT_NOTE

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations


def _batches(items: list, n: int) -> Iterable[list]:
    for i in range(0, len(items), n):
        yield items[i:i + n]


def run_sweep(
    rank: int,
    window: int,
    *,
    oracle_sample: int | None = None,
    jobs: int = 1,
    seed: int = 0,
    time_limit: float | None = None,
) -> SweepReport:
    """Check every weight function of the sweep.

    ``oracle_sample`` limits how many functions are compared with the
    brute-force oracle (``None`` compares all of them). Sampling is seeded.
    When ``time_limit`` seconds elapse, the report is returned with
    ``complete = False``.
    """
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    if window < 2 * rank:
        raise ValueError(f"window {window} is smaller than 2 * rank = {2 * rank}")
    space = list(sweep_space(rank, window))
    if oracle_sample is None or oracle_sample >= len(space):
        chosen = set(range(len(space)))
    else:
        chosen = set(random.Random(seed).sample(range(len(space)), oracle_sample))
    work = [(f.entries, i in chosen) for i, f in enumerate(space)]

    started = time.monotonic()
    outcomes: list[Outcome] = []
    complete = True
    batches = list(_batches(work, 64))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_check_batch, b) for b in batches]
            for fut in futures:
                if time_limit is not None and time.monotonic() - started > time_limit:
                    complete = False
                    for rest in futures:
                        rest.cancel()
                    break
                outcomes += fut.result()
    else:
        for b in batches:
            if time_limit is not None and time.monotonic() - started > time_limit:
                complete = False
                break
            outcomes += _check_batch(b)

    outcomes.sort(key=lambda o: o.f)
    report = SweepReport(rank, window, catalan_bound=catalan(rank + 1), complete=complete)
    report.tested = len(outcomes)
    report.oracle_checked = sum(o.oracle_checked for o in outcomes)
    if outcomes:
        report.max_flat = max(o.size for o in outcomes)
        report.min_flat = min(o.size for o in outcomes)
        report.max_moves = max(o.moves for o in outcomes)
        report.extremal = [list(o.f) for o in outcomes if o.size == report.max_flat]
        report.minimal = [list(o.f) for o in outcomes if o.size == report.min_flat]
    report.violations = [v for o in outcomes for v in o.violations]
    return report
