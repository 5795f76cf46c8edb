"""Weight functions, cap diagrams and tally functions.

A weight function is a map from the integers to the two symbols ``×`` and
``·`` that is ``·`` almost everywhere. It is stored as the sorted tuple of
positions carrying ``×``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

CROSS = "×"
DOT = "·"


@dataclass(frozen=True, order=True)
class WeightFunction:
    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(int(a) for a in self.entries)
        if any(b <= a for a, b in zip(entries, entries[1:])):
            raise ValueError(f"entries must be strictly increasing: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> WeightFunction:
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> WeightFunction:
        """Parse ``"1,2,3"`` (or the empty string) into a weight function."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", "").split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed weight function {text!r}: {exc}") from None

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def anchor(self) -> int:
        """The largest entry ``a_r``."""
        if not self.entries:
            raise ValueError("the empty weight function has no anchor")
        return self.entries[-1]

    def __call__(self, z: int) -> str:
        return CROSS if z in self.entries else DOT

    def __contains__(self, z: object) -> bool:
        return z in self.entries

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def shift(self, s: int) -> WeightFunction:
        return WeightFunction(tuple(a + s for a in self.entries))

    def without_anchor(self) -> WeightFunction:
        return WeightFunction(self.entries[:-1])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def zigzag(r: int, start: int = 2) -> WeightFunction:
    """``(start, start+2, ..., start+2r-2)``; the default is ``p = (2, 4, ..., 2r)``."""
    return WeightFunction(tuple(range(start, start + 2 * r, 2)))


def staircase(r: int, start: int = 1) -> WeightFunction:
    """``(start, start+1, ..., start+r-1)``; the default is ``q = (1, 2, ..., r)``."""
    return WeightFunction(tuple(range(start, start + r)))


@dataclass(frozen=True, order=True)
class Cap:
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"cap must start left of its end: {self}")
        if (self.end - self.start) % 2 == 0:
            raise ValueError(f"cap span must be odd: {self}")

    def contains(self, other: Cap) -> bool:
        return self.start < other.start and other.end < self.end

    def __iter__(self) -> Iterator[int]:
        yield self.start
        yield self.end


@dataclass(frozen=True)
class CapDiagram:
    caps: frozenset[Cap] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        caps = frozenset(c if isinstance(c, Cap) else Cap(*c) for c in self.caps)
        object.__setattr__(self, "caps", caps)
        self._validate()

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> CapDiagram:
        return cls(frozenset(Cap(b, e) for b, e in pairs))

    def _validate(self) -> None:
        points = [z for cap in self.caps for z in cap]
        if len(points) != len(set(points)):
            raise ValueError("cap endpoints must be distinct")
        endpoints = set(points)
        ordered = sorted(self.caps)
        for i, c in enumerate(ordered):
            for d in ordered[i + 1:]:
                # d.start > c.start; crossing iff d starts inside c and ends outside
                if c.start < d.start < c.end < d.end:
                    raise ValueError(f"caps {c} and {d} cross")
            if any(z not in endpoints for z in range(c.start + 1, c.end)):
                raise ValueError(f"cap {c} has an unmatched interior point")

    def sorted(self) -> list[Cap]:
        return sorted(self.caps)

    @property
    def starts(self) -> tuple[int, ...]:
        return tuple(sorted(c.start for c in self.caps))

    def cap_at(self, z: int) -> Cap | None:
        for c in self.caps:
            if z in (c.start, c.end):
                return c
        return None

    def depth(self, cap: Cap) -> int:
        """1 for an innermost cap, one more than the deepest cap nested inside otherwise."""
        inner = [d for d in self.caps if cap.contains(d)]
        return 1 + max((self.depth(d) for d in inner), default=0)

    def __len__(self) -> int:
        return len(self.caps)

    def __iter__(self) -> Iterator[Cap]:
        return iter(self.sorted())


def cap_ends(entries: Iterable[int]) -> list[tuple[int, int]]:
    """Run the right-to-left cap construction on raw integer starts.

    Returns ``(start, end)`` pairs in processing order. This is the hot path
    of the brute-force enumeration, so it avoids building value objects.
    """
    starts = sorted(entries, reverse=True)
    occupied = set(starts)
    pairs = []
    for b in starts:
        z = b + 1
        while z in occupied:
            z += 1
        occupied.add(z)
        pairs.append((b, z))
    return pairs


def build_cap_diagram(f: WeightFunction) -> CapDiagram:
    """The cap diagram ``D_cap(f)`` with one cap starting at each entry of ``f``.

    Entries are processed from the largest down. The cap starting at ``b``
    ends at the leftmost ``z > b`` that is neither an entry of ``f`` nor the
    end of a cap placed earlier.
    """
    return CapDiagram(frozenset(Cap(b, e) for b, e in cap_ends(f.entries)))


def pairs_match(pairs: list[tuple[int, int]], crosses: frozenset[int] | set[int]) -> bool:
    """:func:`matches` on raw ``(start, end)`` pairs from :func:`cap_ends`."""
    if len(pairs) != len(crosses):
        return False
    # each pair holds exactly one cross and the counts agree, so every cross is used
    return all((b in crosses) != (e in crosses) for b, e in pairs)


def matches(c: CapDiagram, f: WeightFunction) -> bool:
    """True when every cap joins one ``×`` of ``f`` to one ``·`` and all ``×`` are used."""
    if len(c) != f.rank:
        return False
    crosses = set(f.entries)
    touched = set()
    for cap in c.caps:
        in_b, in_e = cap.start in crosses, cap.end in crosses
        if in_b == in_e:
            return False
        touched.add(cap.start if in_b else cap.end)
    return touched == crosses


def default_window(f: WeightFunction) -> tuple[int, int]:
    """``[a_1 - 2r - 1, a_r + 2]``; contains every zero of the tally left of the anchor."""
    r = f.rank
    if r == 0:
        return (-1, 1)
    return (f.entries[0] - 2 * r - 1, f.entries[-1] + 2)


class PointClass(enum.Enum):
    LOCAL_MAX = "max"
    LOCAL_MIN = "min"
    SLOPE_UP = "+"
    SLOPE_DOWN = "-"


@dataclass(frozen=True)
class TallyProfile:
    """Tally values of ``f`` on the integer window ``[lo, hi]``.

    The tally goes up by one when stepping onto a ``×`` and down by one when
    stepping onto a ``·``, and takes the value 1 at the anchor ``a_r``.
    """

    f: WeightFunction
    lo: int
    values: tuple[int, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @property
    def anchor(self) -> int:
        return self.f.anchor

    def __getitem__(self, z: int) -> int:
        if not self.lo <= z <= self.hi:
            raise IndexError(f"{z} outside tally window [{self.lo}, {self.hi}]")
        return self.values[z - self.lo]

    def __contains__(self, z: object) -> bool:
        return isinstance(z, int) and self.lo <= z <= self.hi

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(range(self.lo, self.hi + 1), self.values)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())


def tally(f: WeightFunction, window: tuple[int, int] | None = None) -> TallyProfile:
    if f.rank == 0:
        raise ValueError("tally is undefined for the empty weight function")
    lo, hi = window if window is not None else default_window(f)
    a = f.anchor
    if lo > f.entries[0] - 1 or hi < a:
        raise ValueError(f"window [{lo}, {hi}] must contain [{f.entries[0] - 1}, {a}]")
    crosses = set(f.entries)
    values = {a: 1}
    for z in range(a + 1, hi + 1):
        values[z] = values[z - 1] - 1
    for z in range(a - 1, lo - 1, -1):
        values[z] = values[z + 1] - 1 if z + 1 in crosses else values[z + 1] + 1
    return TallyProfile(f, lo, tuple(values[z] for z in range(lo, hi + 1)))


def zeros_left_of_anchor(t: TallyProfile) -> list[int]:
    """All ``z <= a_r`` with tally value 0, ascending.

    Left of ``a_1`` the tally rises by one per step, so the zero set is
    complete once the window reaches a point left of ``a_1`` with positive
    value. A smaller window is rejected.
    """
    a1 = t.f.entries[0]
    if t.lo > a1 - 1 or t[t.lo] <= 0:
        raise ValueError(f"tally window starting at {t.lo} cannot certify the zero set")
    return [z for z, v in t.items() if z <= t.anchor and v == 0]


def classify_point(t: TallyProfile, c: int) -> PointClass:
    if c - 1 not in t or c + 1 not in t:
        raise IndexError(f"{c} needs both neighbours inside [{t.lo}, {t.hi}]")
    left = t[c] - t[c - 1]
    right = t[c + 1] - t[c]
    if left > 0 and right < 0:
        return PointClass.LOCAL_MAX
    if left < 0 and right > 0:
        return PointClass.LOCAL_MIN
    return PointClass.SLOPE_UP if left > 0 else PointClass.SLOPE_DOWN


def is_zigzag(f: WeightFunction) -> bool:
    """True iff ``f`` is ``(2, 4, ..., 2r)`` up to shift."""
    if f.rank == 0:
        raise ValueError("zigzag test needs at least one entry")
    return all(b - a == 2 for a, b in zip(f.entries, f.entries[1:]))
