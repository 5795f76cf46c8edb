"""Legal moves and the enumeration of matching cap diagrams.

For a weight function ``f`` of rank ``r`` the set ``flat(f)`` consists of all
``g`` of rank ``r`` whose cap diagram matches the weight diagram of ``f``.
It is computed two ways: recursively, by peeling off the anchor ``a = a_r``
and splitting on which cap touches it, and by brute force straight from the
definition.

The recursion splits ``flat(f)`` by the cap at the anchor:

* ``HALF``: the cap ``(a, a+1)``. These are exactly ``g + (a,)`` for ``g`` in
  ``flat`` of ``f`` with the anchor removed.
* ``Step(i)``: a cap ``(b, a)`` with ``b = a + 1 - 2i``, so ``i - 1`` cap pairs
  sit underneath it. Its members are obtained from the ``HALF`` piece by
  moving the ``×`` at ``a`` to ``b``, keeping the results that match ``f``
  and close the anchor with the cap ``(b, a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Union

from .catalan import catalan
from .diagram import (
    WeightFunction,
    cap_ends,
    is_zigzag,
    pairs_match,
    tally,
    zeros_left_of_anchor,
)


class _Half:
    """The identity move index, written 1/2."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "HALF"

    def __reduce__(self):
        return (_Half, ())

    @property
    def key(self) -> str:
        return "half"


HALF = _Half()


@dataclass(frozen=True, order=True)
class Step:
    i: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError(f"step index must be positive, got {self.i}")

    @property
    def key(self) -> str:
        return f"step-{self.i}"


MoveIndex = Union[_Half, Step]


def index_order(idx: MoveIndex) -> tuple[int, int]:
    """Sort key putting ``HALF`` first, then steps by ``i``."""
    return (0, 0) if idx is HALF else (1, idx.i)


def move_target(a: int, idx: MoveIndex) -> int:
    """Position ``b`` the anchor's ``×`` moves to; ``a`` itself for ``HALF``."""
    return a if idx is HALF else a + 1 - 2 * idx.i


@dataclass(frozen=True)
class LegalMove:
    source: int
    target: int

    @property
    def index(self) -> MoveIndex:
        if self.source == self.target:
            return HALF
        return Step((self.source - self.target + 1) // 2)


def apply_move(f: WeightFunction, a: int, b: int) -> WeightFunction:
    """Swap the ``×`` at ``a`` with the ``·`` at ``b``; ``b == a`` is the identity."""
    if a not in f:
        raise ValueError(f"{a} is not an entry of {f}")
    if b == a:
        return f
    if b > a:
        raise ValueError(f"move target {b} lies right of source {a}")
    if b in f:
        raise ValueError(f"move target {b} already carries a cross in {f}")
    return WeightFunction(tuple(sorted((set(f.entries) - {a}) | {b})))


def is_legal_move(f: WeightFunction, a: int, b: int) -> bool:
    """Whether the anchor move from ``a`` to ``b`` keeps the tally balanced.

    Requires ``f(a) = ×``, ``f(b) = ·`` and equal numbers of ``×`` and ``·``
    strictly between ``b`` and ``a``, i.e. the tally at ``b`` is one below
    the tally at ``a``. No condition is placed on intermediate tally values.
    """
    if a not in f:
        return False
    if b == a:
        return True
    if b > a or b in f or (a - b) % 2 == 0:
        return False
    t = tally(f, (min(b, f.entries[0] - 1), max(a, f.anchor)))
    return t[a] - t[b] == 1


def legal_moves(f: WeightFunction) -> list[LegalMove]:
    """All legal moves into the anchor, identity first, then by increasing span."""
    a = f.anchor
    zeros = zeros_left_of_anchor(tally(f))
    targets = sorted((z for z in zeros if z not in f), reverse=True)
    return [LegalMove(a, a)] + [LegalMove(a, b) for b in targets]


def legal_move_indices(f: WeightFunction) -> list[MoveIndex]:
    """``LM* f`` in order: ``HALF`` followed by ``Step(i)`` for each legal target."""
    if f.rank == 0:
        raise ValueError("legal moves need a nonempty weight function")
    return [m.index for m in legal_moves(f)]


@dataclass(frozen=True)
class Piece:
    index: MoveIndex
    members: frozenset[WeightFunction]
    left_size: int = 1
    under_size: int = 1

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FlatDecomposition:
    f: WeightFunction
    pieces: tuple[Piece, ...] = field(default_factory=tuple)

    @property
    def members(self) -> list[WeightFunction]:
        """Union of all pieces in lexicographic order."""
        return sorted(set().union(*(p.members for p in self.pieces)))

    def __len__(self) -> int:
        return sum(p.size for p in self.pieces)

    def piece(self, idx: MoveIndex) -> Piece:
        for p in self.pieces:
            if p.index == idx:
                return p
        raise KeyError(idx)


def _factor_sizes(members: frozenset[WeightFunction], b: int, a: int) -> tuple[int, int]:
    """Count distinct configurations left of ``b`` and strictly inside ``(b, a)``."""
    left = {tuple(z for z in g if z < b) for g in members}
    under = {tuple(z for z in g if b < z < a) for g in members}
    return len(left), len(under)


@lru_cache(maxsize=None)
def flat_recursive(f: WeightFunction) -> FlatDecomposition:
    if f.rank == 0:
        return FlatDecomposition(f, (Piece(HALF, frozenset({WeightFunction()})),))
    a = f.anchor
    crosses = set(f.entries)
    half = frozenset(WeightFunction(g.entries + (a,)) for g in flat_recursive(f.without_anchor()).members)
    pieces = [Piece(HALF, half)]
    for move in legal_moves(f)[1:]:
        b = move.target
        image = set()
        for h in half:
            if b in h:
                continue
            g = apply_move(h, a, b)
            pairs = cap_ends(g.entries)
            # a match alone is not enough: the anchor must be closed by the cap (b, a)
            if (b, a) in pairs and pairs_match(pairs, crosses):
                image.add(g)
        members = frozenset(image)
        pieces.append(Piece(move.index, members, *_factor_sizes(members, b, a)))
    return FlatDecomposition(f, tuple(pieces))


def oracle_window(f: WeightFunction, pad: int = 0) -> tuple[int, int]:
    """Candidate start positions ``[a_1 - 2r, a_r]``, widened by ``pad`` on both sides."""
    if f.rank == 0:
        return (0, -1)
    return (f.entries[0] - 2 * f.rank - pad, f.anchor + pad)


def flat_oracle(f: WeightFunction, pad: int = 0) -> list[WeightFunction]:
    """Brute-force ``flat(f)``: try every ``r``-subset of the candidate window."""
    lo, hi = oracle_window(f, pad)
    crosses = frozenset(f.entries)
    return [
        WeightFunction(g)
        for g in combinations(range(lo, hi + 1), f.rank)
        if pairs_match(cap_ends(g), crosses)
    ]


def flat(f: WeightFunction) -> list[WeightFunction]:
    return flat_recursive(f).members


def decomposition_counts(d: FlatDecomposition) -> list[tuple[MoveIndex, int, int, int]]:
    """``(index, size, left_size, under_size)`` per piece; empty for rank 0."""
    if d.f.rank == 0:
        return []
    return [(p.index, p.size, p.left_size, p.under_size) for p in d.pieces]


def factor_bounds(f: WeightFunction, idx: Step) -> tuple[int, int]:
    """Upper bounds ``(C_{r-i+1}, C_{i-1})`` for the left and under factors."""
    return catalan(f.rank - idx.i + 1), catalan(idx.i - 1)


def lm_star_count_bound_check(f: WeightFunction) -> tuple[int, bool]:
    """``(|LM* f|, |LM* f| == r + 1)``; the extremal case must be exactly the zigzags."""
    count = len(legal_move_indices(f))
    extremal = count == f.rank + 1
    if count > f.rank + 1 or extremal != is_zigzag(f):
        raise AssertionError(f"|LM* {f}| = {count} breaks the r + 1 bound or its equality case")
    return count, extremal
