"""Exact counts of partitions organised by central hooks.

Everything here returns Python ints.  Closed forms that involve fractions
are evaluated with :class:`fractions.Fraction` and must come out integral;
a non-integral value raises :class:`ConsistencyError`, since it can only
mean a transcription error in the formula.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, isqrt, prod
from typing import Iterable, Sequence

from .partitions import DifferenceSequence, HookType, delta_of, delta_weight
from .quotient import hooktypes_of_weight

__all__ = [
    "ConsistencyError",
    "DifferenceSet",
    "p_hooktype",
    "hooktypes",
    "p_nr",
    "p_n",
    "p_nr_closed",
    "h_r",
    "h2_closed",
    "p_hdecomp",
    "dh",
    "pi_count",
    "po_count",
    "weight_extremes",
    "hooktypes_single_d",
    "classes_by_product",
    "rectangle_area_form",
]


class ConsistencyError(ArithmeticError):
    """Two routes to the same number disagree, or a closed form is not integral."""


class DifferenceSet(tuple):
    """The entries of a difference sequence as a multiset, largest first."""

    def __new__(cls, ds: Iterable[int]):
        ds = tuple(sorted((int(d) for d in ds), reverse=True))
        if any(d < 1 for d in ds):
            raise ValueError(f"difference set entries must be positive: {ds}")
        return super().__new__(cls, ds)

    def __repr__(self):
        return f"DifferenceSet({tuple(self)!r})"


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def p_hooktype(h: Sequence[int]) -> int:
    """Number of partitions with hook type ``h``.

    ``k_r * (k_{r-1} - k_r - 1) * ... * (k_1 - k_2 - 1)``.

    >>> p_hooktype((7, 4, 2))
    4
    """
    h = HookType(h)
    if not h:
        return 1
    return h[-1] * prod(h[i] - h[i + 1] - 1 for i in range(len(h) - 1))


def hooktypes(n: int, r: int) -> list[HookType]:
    """All hook types of weight ``n`` with ``r`` hooks, in decreasing lexicographic order."""
    return hooktypes_of_weight(n, r)


def _nested_sum(m: int, j: int, below: int) -> int:
    # Choose k_j given the sizes below it; m is the weight left for k_1..k_j.
    # below = k_{j+1}, or 0 when k_j is the inner hook.
    if j == 1:
        return m - below - 1 if below else m
    total = 0
    for k in range(below + 2 if below else 1, m // j - j + 2):
        factor = k - below - 1 if below else k
        total += factor * _nested_sum(m - k, j - 1, k)
    return total


@lru_cache(maxsize=None)
def _p_nr_recurrence(n: int, r: int) -> int:
    if r < 1 or n < r * r:
        return 0
    if r == 1:
        return n
    return sum(
        k * _p_nr_recurrence(n - (k + 1) * r + 1, r - 1)
        for k in range(1, (n - r * (r - 1)) // r + 1)
    )


def p_nr(n: int, r: int, method: str = "sum") -> int:
    """Number of partitions of ``n`` whose Durfee square is ``r`` by ``r``.

    ``method="sum"`` runs the bounded nested sum over hook types, innermost
    hook first; ``method="recurrence"`` peels the inner hook recursively
    down to ``p(n, 1) = n``.
    """
    if r < 1 or n < r * r:
        return 0
    if method == "sum":
        return _nested_sum(n, r, 0)
    if method == "recurrence":
        return _p_nr_recurrence(n, r)
    raise ValueError(f"unknown method {method!r}")


def p_n(n: int) -> int:
    """p(n) as the sum over Durfee sizes of the hook-type sums."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(p_nr(n, r) for r in range(1, isqrt(n) + 1))


def _pn2_closed(n: int) -> Fraction:
    return Fraction(comb(n, 3), 4) - Fraction(n - 1, 8) * (n % 2)


_PN3_CORRECTION = {
    0: lambda n: Fraction(3 * n - 8, 81) - Fraction(n - 3, 32),
    1: lambda n: Fraction(2, 81),
    2: lambda n: -Fraction(n - 3, 32),
    3: lambda n: Fraction(3 * n - 8, 81),
    4: lambda n: Fraction(2, 81) - Fraction(n - 3, 32),
    5: lambda n: Fraction(0),
}


def _pn3_quintic(n: int) -> Fraction:
    return Fraction((n + 1) * (n - 5) * (3 * n**3 - 33 * n**2 + 83 * n - 13), 12960)


def _pn3_closed(n: int) -> Fraction:
    return _pn3_quintic(n) + _PN3_CORRECTION[n % 6](n)


def _pn3_floor_form(n: int) -> Fraction:
    """The same count with the residue corrections written through floors."""
    return (
        _pn3_quintic(n)
        - Fraction(n - 3, 32) * (n // 2 - (n - 1) // 2)
        + (n // 3) * Fraction(3 * n - 8, 81)
        - ((n - 1) // 3) * Fraction(3 * n - 10, 81)
        - Fraction(2, 81) * ((n - 2) // 3)
    )


def p_nr_closed(n: int, r: int) -> int:
    """Closed-form ``p(n, r)`` for ``r`` in {2, 3}.

    >>> [p_nr_closed(n, 3) for n in (9, 10, 11)]
    [1, 2, 5]
    """
    if r not in (2, 3):
        raise ValueError("closed forms exist only for r = 2 and r = 3")
    if n < r * r:
        raise ValueError(f"need n >= {r * r}")
    if r == 2:
        return _integral(_pn2_closed(n), f"p({n},2) closed form")
    value = _integral(_pn3_closed(n), f"p({n},3) closed form")
    if value != _integral(_pn3_floor_form(n), f"p({n},3) floor form"):
        raise ConsistencyError(f"p({n},3): residue-class and floor forms disagree")
    return value


def _h1_closed(n: int) -> int:
    s = isqrt(n)
    return s * (n + 1) - s * (s + 1) * (2 * s + 1) // 6


def h2_closed(n: int) -> int:
    """Closed form for ``h_2(n)``, valid for ``n >= 6``."""
    if n < 6:
        raise ValueError("the closed form for h_2 needs n >= 6")
    total = Fraction(0)
    for j in range(2, isqrt(n - 2) + 1):
        m = n - j * j
        total += Fraction(comb(m + 4, 3), 4) - Fraction((m + 3) * ((j + n) % 2), 8) - (m + 1)
    return _integral(total, f"h_2({n}) closed form")


def _weighted_heads(budget: int, r: int) -> int:
    # sum of d_1 * ... * d_r over d_i >= 1, d_r >= 2, with sum(i * d_i) == budget
    @lru_cache(maxsize=None)
    def go(b: int, i: int) -> int:
        if i == 0:
            return 1 if b == 0 else 0
        lo = 2 if i == r else 1
        # positions 1..i-1 need at least i(i-1)/2 more
        reserve = i * (i - 1) // 2
        return sum(d * go(b - i * d, i - 1) for d in range(lo, (b - reserve) // i + 1))

    if budget < 0:
        return 0
    return go(budget, r)


def h_r(n: int, r: int) -> int:
    """Partitions of ``n`` that are a non-degenerate ``r``-hook times a Durfee square.

    For ``r >= 2`` these are the difference sequences ``(d_1, ..., d_r, 1^s)``
    with ``d_r >= 2``, each counted with multiplicity ``d_1 * ... * d_r``.
    ``h_1`` also absorbs the squares themselves.
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    if r == 1:
        return _h1_closed(n)
    total = 0
    s = 0
    while True:
        tail = sum(range(r + 1, r + s + 1)) + comb(r + s, 2)
        # smallest head weight with d_r >= 2 is r(r+1)/2 + r
        if tail + r * (r + 1) // 2 + r > n:
            break
        total += _weighted_heads(n - tail, r)
        s += 1
    if r == 2 and n >= 6 and total != h2_closed(n):
        raise ConsistencyError(f"h_2({n}): enumeration gives {total}, closed form {h2_closed(n)}")
    return total


def p_hdecomp(n: int) -> int:
    """p(n) as ``h_1(n) + h_2(n) + ...``."""
    if n < 1:
        raise ValueError("n must be positive")
    top = max(1, n // (isqrt(n) + 1))
    return sum(h_r(n, r) for r in range(1, top + 1))


def dh(n: int) -> int:
    """Partitions of ``n`` of the form (Durfee square) * (1-hook), the square possibly empty.

    >>> dh(12)
    19
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(n // x - x + 1 for x in range(1, isqrt(n) + 1) if n % x == 0)


def pi_count(n: int, r: int, k: int) -> int:
    """``r``-hooks of weight ``n`` whose inner hook has size ``k``."""
    direct = sum(p_hooktype(h) for h in hooktypes(n, r) if h[-1] == k)
    if r >= 2:
        via_bijection = k * p_nr(n - (k + 1) * (r - 1) - k, r - 1)
        if direct != via_bijection:
            raise ConsistencyError(
                f"pi({n},{r},{k}): hook-type sum {direct} != inner-hook bijection {via_bijection}"
            )
    return direct


def po_count(n: int, r: int, k: int) -> int:
    """``r``-hooks of weight ``n`` whose outer hook has size ``k``."""
    return sum(p_hooktype(h) for h in hooktypes(n, r) if h[0] == k)


def weight_extremes(D: Iterable[int]) -> tuple[DifferenceSequence, DifferenceSequence, int]:
    """Lightest and heaviest orderings of a difference set, and their weight gap.

    >>> weight_extremes((1, 4, 1, 2))
    (DifferenceSequence((4, 2, 1, 1)), DifferenceSequence((1, 1, 2, 4)), 10)
    """
    ds = DifferenceSet(D)
    if not ds:
        raise ValueError("difference set must be non-empty")
    lo = DifferenceSequence(ds)
    hi = DifferenceSequence(reversed(ds))
    spread = sum(ds[i] - ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))
    if delta_weight(hi) - delta_weight(lo) != spread:
        raise ConsistencyError(f"weight spread of {ds} is not {spread}")
    return lo, hi, spread


def weight_extremes_brute(D: Iterable[int]) -> tuple[set, set]:
    """All orderings of ``D`` achieving the minimum and the maximum weight."""
    orders = {DifferenceSequence(p) for p in permutations(tuple(D))}
    weights = {o: delta_weight(o) for o in orders}
    lo, hi = min(weights.values()), max(weights.values())
    return {o for o, w in weights.items() if w == lo}, {o for o, w in weights.items() if w == hi}


def hooktypes_single_d(d: int, r: int) -> list[HookType]:
    """Hook types whose difference set is ``{d, 1^(r-1)}``, for ``s = 0 .. r-1``.

    The ``s``-th one is ``(2s+d+2(r-s-1), ..., 2s+d+2, 2s+d, 2s-1, ..., 3, 1)``,
    with difference sequence ``(1^(r-s-1), d, 1^s)``.
    """
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    out = []
    for s in range(r):
        top = tuple(2 * s + d + 2 * i for i in range(r - s - 1, -1, -1))
        bottom = tuple(2 * i - 1 for i in range(s, 0, -1))
        h = HookType(top + bottom)
        if delta_of(h) != (1,) * (r - s - 1) + (d,) + (1,) * s:
            raise ConsistencyError(f"hook type {h} does not have difference set {{{d}, 1^{r - 1}}}")
        out.append(h)
    return out


def classes_by_product(n: int) -> dict[int, list[DifferenceSequence]]:
    """Difference sequences of weight ``n`` grouped by the product of their entries."""
    groups = defaultdict(list)
    for h in hooktypes_of_weight(n):
        d = delta_of(h)
        groups[prod(d)].append(d)
    return dict(groups)


def rectangle_area_form(n: int) -> Fraction:
    """``(n - 3)`` times the mean area of the integer rectangles ``a x b`` with ``2(a + b) = n - 1``.

    Rectangles are ordered pairs ``(a, b)``; for odd ``n > 6`` this equals ``p(n, 2)``.
    """
    if n % 2 == 0 or n < 7:
        raise ValueError("defined for odd n >= 7")
    half = (n - 1) // 2
    areas = [a * (half - a) for a in range(1, half)]
    return (n - 3) * Fraction(sum(areas), len(areas))
