"""The descent game on a rooted tree.

A shared token starts at the root and players alternately slide it to a
child of its current vertex; whoever cannot move (the token sits on a
leaf) loses.  The mover wins exactly when some root subtree is a loss
for its own mover, so a plain win-loss recursion settles every position.
The value of the game polynomial at -1 (see ``poly``) reads off the same
winner, and the census over all increasing trees on n vertices recovers
the sequence in ``seq``.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache

from .tree import PlaneTree


class Winner(enum.Enum):
    FIRST = "player1"
    SECOND = "player2"


@lru_cache(maxsize=None)
def mover_loses(t: PlaneTree) -> bool:
    """True when the player to move loses ``t`` under optimal play."""
    return not any(mover_loses(c) for c in t)


def winner(t: PlaneTree) -> Winner:
    """
    >>> winner(()).value
    'player2'
    >>> winner(((),)).value
    'player1'
    """
    return Winner.SECOND if mover_loses(t) else Winner.FIRST


def optimal_move(t: PlaneTree) -> int | None:
    """The least 1-based root-child index whose subtree the opponent
    then loses, or None when the mover has no winning move."""
    if mover_loses(t):
        return None
    for k, child in enumerate(t, start=1):
        if mover_loses(child):
            return k
    raise AssertionError("winning position must have a losing child")


def census_second_player_wins(n: int, limit: int = 10) -> int:
    """Count increasing trees on n vertices that the second player wins.

    Sweeps all (n-1)! parent choices directly, so the cost is factorial;
    raise ``limit`` knowingly (n = 11 already means 3.6e6 trees).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > limit:
        raise ValueError(f"census of {n} exceeds the limit {limit}; raise it explicitly to proceed")
    if n == 1:
        return 1
    count = 0
    ranges = [range(i) for i in range(1, n)]
    for par in itertools.product(*ranges):
        # one bottom-up sweep: a vertex whose mover loses marks its parent winnable
        w = [False] * n
        for v in range(n - 1, 0, -1):
            if not w[v]:
                w[par[v - 1]] = True
        if not w[0]:
            count += 1
    return count
