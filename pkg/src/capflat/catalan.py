"""Catalan numbers and noncrossing arc systems."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

_table = [1]
_lock = threading.Lock()


def catalan(n: int) -> int:
    """``C_n`` from the fundamental recurrence ``C_{m+1} = sum_i C_{m-i+1} C_{i-1}``.

    Values are cached in a module-level table. Python integers do not
    overflow, so there is no size limit beyond memory.
    """
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    if n >= len(_table):
        with _lock:
            while len(_table) <= n:
                m = len(_table) - 1
                _table.append(sum(_table[m - i + 1] * _table[i - 1] for i in range(1, m + 2)))
    return _table[n]


def recurrence_holds(n: int) -> bool:
    """Check ``C_{n+1}`` against the recurrence using independently cached values."""
    return catalan(n + 1) == sum(catalan(n - i + 1) * catalan(i - 1) for i in range(1, n + 2))


@dataclass(frozen=True)
class ArcSystem:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        points = sorted(p for arc in self.arcs for p in arc)
        if points != list(range(2 * self.n)):
            raise ValueError(f"arcs do not form a perfect matching of 0..{2 * self.n - 1}")
        for (p, q), (s, t) in combinations(sorted(self.arcs), 2):
            if p < s < q < t:
                raise ValueError(f"arcs {(p, q)} and {(s, t)} cross")

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def _noncrossing(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    # pair the leftmost point with a partner leaving an even block inside
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for a in _noncrossing(inside):
            for b in _noncrossing(outside):
                yield [(first, points[k]), *a, *b]


def enumerate_arc_systems(n: int) -> list[ArcSystem]:
    """All noncrossing perfect matchings of the points ``0, ..., 2n-1``, sorted."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    systems = [ArcSystem(n, frozenset(arcs)) for arcs in _noncrossing(list(range(2 * n)))]
    return sorted(systems, key=ArcSystem.sorted)


def exercise1_count_check(k: int) -> tuple[int, int, bool]:
    """``(|A_k|, |B_k|, equal)`` where ``B_k`` is the matching set of ``(2, 4, ..., 2k-2)``."""
    from .diagram import zigzag
    from .moves import flat_oracle

    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    a_k = len(enumerate_arc_systems(k))
    b_k = len(flat_oracle(zigzag(k - 1)))
    return a_k, b_k, a_k == b_k == catalan(k)


def exercise2_confined_count(m: int) -> int:
    """Number of cap diagrams whose caps exactly fill the block ``1, ..., 2m``.

    Enumerated through the cap construction: every ``m``-subset of the block is
    used as a set of cap starts and kept when no cap leaves the block.
    """
    from .diagram import cap_ends

    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    block_end = 2 * m
    return sum(
        1
        for starts in combinations(range(1, block_end + 1), m)
        if all(e <= block_end for _, e in cap_ends(starts))
    )
