"""Permutations of {1..n} that fix 1, and their inversion combinatorics.

A permutation is a plain tuple in one-line notation, with positions and
values both 1-based: ``p[i - 1]`` is the value at position ``i``.  The
text form is comma-separated with no spaces, e.g. ``1,6,2,3,5,7,4``.

The first-inversion table ``t`` of a permutation of size ``n`` records,
for each position ``i``, the nearest later position holding a smaller
value, with sentinel ``n + 1`` when every later value is larger.  Only
arguments ``2..n+1`` matter (position 1 holds the value 1 here, so it is
never the top of an inversion), and the table is stored as a tuple of
length ``n`` with ``t[i - 2]`` giving ``t(i)``; the final entry, the
argument ``n + 1``, is always the sentinel.  Tables arising this way are
exactly the non-crossing parent tables of plane trees read in postorder,
which is what ties this module to ``tree`` and ``tamari``.

Separator placements split a permutation into consecutive blocks.  A
placement is valid when every block starts with its minimum, it is
signed by parity of the separator count, and the signed totals over all
placements of all permutations fixing 1 reproduce the census numbers of
``seq``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

PATTERNS = (213, 312)


def check_permutation(values: Sequence[int]) -> Perm:
    """Return ``values`` as a tuple, or raise ValueError if it is not a
    permutation of {1..n}."""
    p = tuple(values)
    n = len(p)
    if n == 0:
        raise ValueError("empty permutation")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    return p


def check_fixes_one(values: Sequence[int]) -> Perm:
    p = check_permutation(values)
    if p[0] != 1:
        raise ValueError(f"permutation must fix 1 (got value {p[0]} at position 1)")
    return p


def parse_permutation(text: str) -> Perm:
    parts = text.split(",")
    values = []
    for k, part in enumerate(parts):
        part = part.strip()
        if not part:
            raise ValueError(f"empty entry at index {k} in permutation text {text!r}")
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"bad integer {part!r} at index {k} in permutation text") from None
    return check_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(str(v) for v in p)


def inversions(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """All position pairs (i, j) with i < j and p(i) > p(j), 1-based.

    >>> sorted(inversions((1, 3, 2)))
    [(2, 3)]
    """
    p = check_permutation(p)
    n = len(p)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[i - 1] > p[j - 1]
    )


def first_inversions(p: Sequence[int]) -> tuple[int, ...]:
    """The first-inversion table of ``p``: entry ``i - 2`` is the least
    position ``j > i`` with a smaller value, or the sentinel ``n + 1``.

    >>> first_inversions((1, 6, 2, 3, 5, 7, 4))
    (3, 8, 8, 7, 7, 8, 8)
    """
    p = check_fixes_one(p)
    n = len(p)
    out = []
    for i in range(2, n + 1):
        ti = n + 1
        for j in range(i + 1, n + 1):
            if p[j - 1] < p[i - 1]:
                ti = j
                break
        out.append(ti)
    out.append(n + 1)
    return tuple(out)


def check_first_inversions(t: Sequence[int]) -> tuple[int, ...]:
    """Validate a first-inversion table: entries exceed their argument,
    stay within the sentinel, never cross, and the last entry is the
    sentinel itself.  Returns the table as a tuple."""
    t = tuple(t)
    n = len(t)
    if n == 0:
        raise ValueError("empty first-inversion table")
    if t[n - 1] != n + 1:
        raise ValueError(f"entry for argument {n + 1} must be the sentinel {n + 1}, got {t[n - 1]}")
    for i in range(2, n + 1):
        ti = t[i - 2]
        if not i < ti <= n + 1:
            raise ValueError(f"t({i}) = {ti} is outside {i + 1}..{n + 1}")
    # non-crossing: an argument strictly inside (i, t(i)) cannot map past t(i)
    for i in range(2, n + 1):
        for j in range(i + 1, min(t[i - 2], n + 1)):
            if t[j - 2] > t[i - 2]:
                raise ValueError(f"crossing pair: t({i}) = {t[i - 2]} but t({j}) = {t[j - 2]}")
    return t


def first_inversion_orbit(t: Sequence[int], i: int) -> tuple[int, ...]:
    """The forward orbit i -> t(i) -> t(t(i)) .. ending at the sentinel
    (the sentinel is included, the start is not)."""
    n = len(t)
    if not 2 <= i <= n + 1:
        raise ValueError(f"argument {i} outside 2..{n + 1}")
    out = []
    j = i
    while j != n + 1:
        j = t[j - 2]
        out.append(j)
    if not out:
        out.append(n + 1)
    return tuple(out)


def avoids(p: Sequence[int], pattern: int) -> bool:
    """True when no index triple of ``p`` carries the given pattern.

    Pattern 213 looks for i < j < k with p(j) < p(i) < p(k); pattern 312
    looks for p(j) < p(k) < p(i).

    >>> avoids((1, 7, 2, 3, 5, 6, 4), 213)
    True
    >>> avoids((1, 3, 2, 4, 6, 7, 5), 312)
    True
    """
    if pattern not in PATTERNS:
        raise ValueError(f"pattern must be one of {PATTERNS}, got {pattern}")
    p = check_permutation(p)
    for a, b, c in itertools.combinations(p, 3):
        if pattern == 213:
            if b < a < c:
                return False
        else:
            if b < c < a:
                return False
    return True


def weak_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Right weak order by inversion-set containment."""
    a = check_permutation(a)
    b = check_permutation(b)
    if len(a) != len(b):
        raise ValueError("permutations must have the same size")
    return inversions(a) <= inversions(b)


def enumerate_fixing_one(n: int) -> Iterator[Perm]:
    """All permutations of {1..n} fixing 1, in lexicographic order."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    for rest in itertools.permutations(range(2, n + 1)):
        yield (1, *rest)


@dataclass(frozen=True)
class SeparatorPlacement:
    """A valid cut of a permutation into blocks, signed by cut parity.

    ``separators`` holds the positions a block starts at (a subset of
    2..n); validity means every block begins with its minimum.
    """

    perm: Perm
    separators: frozenset[int]

    @property
    def sign(self) -> int:
        return -1 if len(self.separators) % 2 else 1

    @property
    def rank(self) -> int:
        return len(self.separators)


def placement_is_valid(p: Sequence[int], separators: Iterable[int]) -> bool:
    """Block-minimum rule: each block's first value is the block minimum."""
    p = check_fixes_one(p)
    n = len(p)
    cuts = sorted(set(separators))
    if any(not 2 <= s <= n for s in cuts):
        raise ValueError(f"separators must lie in 2..{n}, got {cuts}")
    starts = [1, *cuts]
    ends = [*(c - 1 for c in cuts), n]
    for a, b in zip(starts, ends):
        block = p[a - 1 : b]
        if block[0] != min(block):
            return False
    return True


def first_inversion_closed(p: Sequence[int], separators: Iterable[int]) -> bool:
    """Closure rule: each separator's first inversion is the sentinel or
    itself a separator.  Equivalent to the block-minimum rule."""
    p = check_fixes_one(p)
    n = len(p)
    t = first_inversions(p)
    seps = set(separators)
    return all(t[i - 2] == n + 1 or t[i - 2] in seps for i in seps)


def separator_placements(p: Sequence[int]) -> Iterator[SeparatorPlacement]:
    """All valid separator placements of ``p``, by size then position."""
    p = check_fixes_one(p)
    n = len(p)
    for r in range(n):
        for combo in itertools.combinations(range(2, n + 1), r):
            if placement_is_valid(p, combo):
                yield SeparatorPlacement(p, frozenset(combo))


def signed_placement_total(n: int) -> int:
    """Sum of placement signs over every permutation of {1..n} fixing 1."""
    total = 0
    for p in enumerate_fixing_one(n):
        for placement in separator_placements(p):
            total += placement.sign
    return total
