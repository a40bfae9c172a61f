"""Dense integer polynomials in q, and the game polynomial of a tree.

The game polynomial of a plane tree with root subtrees T_1..T_m is the
product of the factors (1 + q * poly(T_k)); the single vertex gives 1.
Two further computations of the same polynomial live here: a signed sum
over prunings (one term (-q)^rank * (1+q)^covers per pruning whose game
is lost by the player to move) and a Monte-Carlo estimate of the value
at q in [-1, 0] via the recursive coin-flip event ``event_frequency``
samples.  Agreement of all three is what the test suite leans on.

Text form is ascending with explicit carets, e.g. ``1 + 2*q + 3*q^2``;
JSON form is the ascending coefficient list.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .tree import PlaneTree, vertex_count


class Poly:
    """An integer polynomial stored as an ascending coefficient tuple
    with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def substitute_neg_q(self) -> "Poly":
        return Poly(-c if d % 2 else c for d, c in enumerate(self.coeffs))

    def substitute_q_squared(self) -> "Poly":
        out = [0] * (2 * len(self.coeffs))
        for d, c in enumerate(self.coeffs):
            out[2 * d] = c
        return Poly(out)

    def times_one_plus_q_power(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError(f"need k >= 0, got {k}")
        return self * Poly(math.comb(k, j) for j in range(k + 1))

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                qpart = "q" if d == 1 else f"q^{d}"
                body = qpart if abs(c) == 1 else f"{abs(c)}*{qpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def game_polynomial(t: PlaneTree) -> Poly:
    """Product recursion over root subtrees.

    >>> str(game_polynomial(((), ())))
    '1 + 2*q + q^2'
    """
    out = ONE
    for c in t:
        out = out * (ONE + Q * game_polynomial(c))
    return out


def pruning_profiles(t: PlaneTree) -> list[tuple[int, int, bool]]:
    """One ``(rank, covers, mover_loses)`` triple for every pruning of
    ``t`` (the root plus a parent-closed vertex set).  Rank counts the
    pruning's non-root vertices, covers counts the vertices just outside
    it whose parent lies inside, and ``mover_loses`` says the pruning,
    played as its own game tree, is lost by the player to move."""
    opts = [[None, *pruning_profiles(c)] for c in t]
    if not opts:
        return [(0, 0, True)]
    out = []
    for combo in itertools.product(*opts):
        rank = 0
        covers = 0
        loses = True
        for item in combo:
            if item is None:
                covers += 1
            else:
                r, c, child_loses = item
                rank += r + 1
                covers += c
                if child_loses:
                    loses = False
        out.append((rank, covers, loses))
    return out


def game_polynomial_from_prunings(t: PlaneTree) -> Poly:
    """Signed pruning sum: (-q)^rank * (1+q)^covers over the prunings
    whose game the mover loses.  Agrees with ``game_polynomial``."""
    counts: Counter[tuple[int, int]] = Counter()
    for rank, covers, loses in pruning_profiles(t):
        if loses:
            counts[rank, covers] += 1
    coeffs = [0] * vertex_count(t)
    for (rank, covers), mult in counts.items():
        sign = -1 if rank % 2 else 1
        for j in range(covers + 1):
            coeffs[rank + j] += sign * mult * math.comb(covers, j)
    return Poly(coeffs)


def event_frequency(t: PlaneTree, q, trials: int = 100_000, seed: int = 0) -> float:
    """Empirical frequency of the recursive coin-flip event whose
    probability is the game polynomial at ``q``.

    Starting at the root, one coin is flipped per child of each visited
    vertex (heads with probability -q, so q must lie in [-1, 0]); heads
    visits the child.  The event holds when no visited child's own event
    holds, evaluated bottom up over the visited set.
    """
    heads = -Fraction(q) if isinstance(q, str) else -q
    heads = float(heads)
    if not 0.0 <= heads <= 1.0:
        raise ValueError(f"q must lie in [-1, 0], got {q}")
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    rng = random.Random(seed)
    rand = rng.random

    def occurs(node: PlaneTree) -> bool:
        ok = True
        for child in node:
            if rand() < heads:
                if occurs(child):
                    ok = False
        return ok

    hits = 0
    for _ in range(trials):
        if occurs(t):
            hits += 1
    return hits / trials
