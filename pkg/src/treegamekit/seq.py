"""Five independent computations of one integer sequence.

The sequence counts increasing trees on n vertices whose pruning game is
a second-player win.  It starts 1, 0, 1, 1, 8, 26, 194 and is computed
here by

* an alternating sum of unsigned Stirling numbers of the first kind,
* exact series extraction from the exponential generating function
  log(1 - log(1 - x)),
* direct enumeration of the (n-1)! increasing trees (see ``game``),
* a recurrence splitting a tree at the subtree containing the top label,
* a complementary recurrence for the first-player counts.

Exact rational series arithmetic (Fraction coefficients, truncated at a
fixed order) lives here too, including log/exp inverses used to sanity
check the series route.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import game
from .poly import Poly


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] + (n - 1) * (prev[k] if k <= n - 1 else 0)
    row[0] = 0
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind, c(n, k): permutations
    of n letters with k cycles.

    >>> stirling_first(6, 3)
    225
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k = {k}")
    return _stirling_row(n)[k]


def census_by_stirling_sum(n: int) -> int:
    """Alternating sum (-1)^(k-1) * (k-1)! * c(n, k) over k = 1..n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    row = _stirling_row(n)
    total = 0
    for k in range(1, n + 1):
        term = math.factorial(k - 1) * row[k]
        total += term if (k - 1) % 2 == 0 else -term
    return total


# ---------------------------------------------------------------------------
# exact truncated series (lists of Fractions, index = exponent)


def series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a[: order + 1]):
        if ca:
            for j, cb in enumerate(b[: order + 1 - i]):
                if cb:
                    out[i + j] += ca * cb
    return out


def series_log_one_plus(f: list[Fraction], order: int) -> list[Fraction]:
    """log(1 + f) through the given order; f must have no constant term."""
    if f and f[0] != 0:
        raise ValueError("series must have zero constant term")
    f = list(f[: order + 1]) + [Fraction(0)] * max(0, order + 1 - len(f))
    total = [Fraction(0)] * (order + 1)
    power = list(f)
    for m in range(1, order + 1):
        c = Fraction((-1) ** (m - 1), m)
        for i in range(order + 1):
            total[i] += c * power[i]
        power = series_mul(power, f, order)
    return total


def series_exp(f: list[Fraction], order: int) -> list[Fraction]:
    """exp(f) through the given order; f must have no constant term."""
    if f and f[0] != 0:
        raise ValueError("series must have zero constant term")
    f = list(f[: order + 1]) + [Fraction(0)] * max(0, order + 1 - len(f))
    total = [Fraction(0)] * (order + 1)
    total[0] = Fraction(1)
    power = list(f)
    factorial = 1
    for m in range(1, order + 1):
        factorial *= m
        c = Fraction(1, factorial)
        for i in range(order + 1):
            total[i] += c * power[i]
        power = series_mul(power, f, order)
    return total


def census_by_egf(n_max: int) -> list[int]:
    """Coefficients n! [x^n] log(1 - log(1 - x)) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    inner = [Fraction(0)] + [Fraction(1, k) for k in range(1, n_max + 1)]  # -log(1-x)
    series = series_log_one_plus(inner, n_max)
    out = []
    factorial = 1
    for n in range(1, n_max + 1):
        factorial *= n
        value = series[n] * factorial
        if value.denominator != 1:
            raise ArithmeticError(f"coefficient at x^{n} is not integral: {value}")
        out.append(int(value))
    return out


def census_by_tree_enumeration(n: int, limit: int = 10) -> int:
    """Direct game census over all increasing trees (factorial cost)."""
    return game.census_second_player_wins(n, limit=limit)


def census_by_split_recurrence(n_max: int) -> list[int]:
    """a_1 = 1 and, for n >= 2,
    a_n = sum over k of C(n-2, k-1) * ((k-1)! - a_k) * a_{n-k}:
    split at the root subtree holding the largest label."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    out = [1]
    for n in range(2, n_max + 1):
        total = 0
        for k in range(1, n):
            total += math.comb(n - 2, k - 1) * (math.factorial(k - 1) - out[k - 1]) * out[n - k - 1]
        out.append(total)
    return out


def census_by_complement_recurrence(n_max: int) -> list[int]:
    """(n-1)! - a_n = sum over k of C(n-1, k-1) * (n-k-1)! * a_k, read as
    a count of the first-player wins."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    out: list[int] = []
    for n in range(1, n_max + 1):
        rhs = sum(
            math.comb(n - 1, k - 1) * math.factorial(n - k - 1) * out[k - 1]
            for k in range(1, n)
        )
        out.append(math.factorial(n - 1) - rhs)
    return out


METHODS = ("stirling", "egf", "census", "split", "complement")


def census_table(n_max: int, census_limit: int = 10) -> dict[str, list[int]]:
    """Values 1..n_max for every method, keyed by method name."""
    return {
        "stirling": [census_by_stirling_sum(n) for n in range(1, n_max + 1)],
        "egf": census_by_egf(n_max),
        "census": [census_by_tree_enumeration(n, limit=census_limit) for n in range(1, n_max + 1)],
        "split": census_by_split_recurrence(n_max),
        "complement": census_by_complement_recurrence(n_max),
    }


def separator_weight_polynomial(n: int) -> Poly:
    """Sum of q^(separator count) over all valid separator placements of
    permutations of {1..n} fixing 1; coefficient k-1 is (k-1)! * c(n, k).

    >>> str(separator_weight_polynomial(3))
    '2 + 3*q + 2*q^2'
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    row = _stirling_row(n)
    return Poly(math.factorial(k - 1) * row[k] for k in range(1, n + 1))
