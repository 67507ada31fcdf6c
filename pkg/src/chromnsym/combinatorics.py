"""Integer compositions and partitions.

Compositions and partitions are plain tuples of positive ints; the helpers
`as_composition` and `as_partition` validate and normalize user input.
"""

from itertools import accumulate
from typing import Iterable, Tuple

from . import config
from .errors import InputError

Composition = Tuple[int, ...]
Partition = Tuple[int, ...]


def as_composition(parts: Iterable[int]) -> Composition:
    try:
        c = tuple(parts)
    except TypeError:
        raise InputError(f"composition must be a sequence of integers, got {parts!r}")
    for x in c:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"composition parts must be integers, got {x!r}")
        if x < 1:
            raise InputError(f"composition parts must be positive, got {c}")
    return c


def as_partition(parts: Iterable[int]) -> Partition:
    p = as_composition(parts)
    if any(a < b for a, b in zip(p, p[1:])):
        raise InputError(f"partition parts must be weakly decreasing, got {p}")
    return p


def canonical_key(c):
    """Sort key for term output: graded first, then lexicographic on parts."""
    return (sum(c), c)


def descent_set(c: Composition) -> frozenset:
    """Proper partial sums of `c`, e.g. (1, 2, 1) -> {1, 3}."""
    return frozenset(accumulate(c[:-1]))


def from_descents(n: int, descents) -> Composition:
    """Inverse of `descent_set` for compositions of `n`."""
    cuts = [0, *sorted(descents), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]) if b > a) if n else ()


def refines(a: Composition, b: Composition) -> bool:
    """True iff `a` is finer than (or equal to) `b` in the refinement order."""
    if sum(a) != sum(b):
        raise InputError(f"refines: degree mismatch between {a} and {b}")
    return descent_set(b) <= descent_set(a)


def coarsenings(a: Composition) -> list:
    """All compositions `b` with D(b) contained in D(a), `a` itself first.

    Bit i of a counter marks the i-th descent of `a` (in increasing order)
    as removed; the output follows that counter, so its length is
    2^(len(a) - 1) and the last entry is the one-part composition.
    """
    if not a:
        return [()]
    n = sum(a)
    desc = sorted(descent_set(a))
    out = []
    for mask in range(1 << len(desc)):
        kept = [d for i, d in enumerate(desc) if not (mask >> i) & 1]
        out.append(from_descents(n, kept))
    return out


def sort_to_partition(a: Composition) -> Partition:
    return tuple(sorted(a, reverse=True))


def compositions_of(n: int, cap=None) -> list:
    """All compositions of `n` in canonical (lexicographic) order."""
    limit = config.cap("degree") if cap is None else cap
    if n < 0:
        raise InputError(f"compositions_of: n must be nonnegative, got {n}")
    if n > limit:
        raise InputError(f"compositions_of: n={n} exceeds degree cap {limit}")
    return _compositions(n)


def _compositions(n):
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first, *rest))
    return out


def partitions_of(n: int, max_part=None) -> list:
    """Partitions of `n` in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first, *rest))
    return out
