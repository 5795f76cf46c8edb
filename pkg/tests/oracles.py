"""Independent reference computations used by the tests.

None of these go through the package's own construction code.
"""

from itertools import permutations
from math import comb


def catalan_binomial(n):
    return comb(2 * n, n) // (n + 1)


def bracket_caps(starts):
    """Cap diagram of ``starts`` by bracket matching.

    Starts are opening brackets, every other integer a closing one; each cap
    joins an opening bracket to the closer that balances it.
    """
    starts = set(starts)
    if not starts:
        return set()
    caps, stack = set(), []
    z = min(starts)
    while stack or z <= max(starts):
        if z in starts:
            stack.append(z)
        elif stack:
            caps.add((stack.pop(), z))
        z += 1
    return caps


def tally_by_sum(f, z):
    """Tally at ``z`` from the net symbol count between ``z`` and the anchor."""
    a = max(f)
    if z <= a:
        return 1 - sum(1 if x in f else -1 for x in range(z + 1, a + 1))
    return 1 - (z - a)


def matches_by_symbols(caps, f):
    f = set(f)
    if len(caps) != len(f):
        return False
    symbols = [(b in f, e in f) for b, e in caps]
    return all(x != y for x, y in symbols)


def all_noncrossing_matchings(n):
    """Every perfect matching of ``0..2n-1`` from permutations, keeping noncrossing ones."""
    points = list(range(2 * n))
    found = set()
    for perm in permutations(points):
        arcs = frozenset(tuple(sorted(perm[i:i + 2])) for i in range(0, 2 * n, 2))
        if arcs in found:
            continue
        if all(not (p < s < q < t) for (p, q) in arcs for (s, t) in arcs):
            found.add(arcs)
    return found
