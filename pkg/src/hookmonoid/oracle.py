"""Brute-force ground truth by exhaustive enumeration.

Statistics are read straight off the parts (Durfee size, diagonal hook
lengths) without going through the Frobenius machinery of the rest of the
package, so the two can be compared.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

from .partitions import Partition

__all__ = ["enumerate_partitions", "enumerate_two_valued", "count_where", "tally", "pentagonal_counts"]


def _zs1(n: int) -> Iterator[tuple[int, ...]]:
    # Zoghbi-Stojmenovic ZS1: weakly decreasing parts, reverse lexicographic order
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1  # number of parts; index of the last part > 1 (1-based)
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n``, each once, in reverse lexicographic order."""
    for parts in _zs1(n):
        yield Partition(parts)


def enumerate_two_valued(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with at most two distinct part sizes, as raw tuples."""
    for a in range(1, n + 1):
        if n % a == 0:
            yield (a,) * (n // a)
        for ca in range(1, n // a + 1):
            rest = n - a * ca
            for b in range(1, a):
                if rest > 0 and rest % b == 0:
                    yield (a,) * ca + (b,) * (rest // b)


def _durfee(parts) -> int:
    r = 0
    while r < len(parts) and parts[r] > r:
        r += 1
    return r


def _diagonal_hooks(parts) -> tuple[int, ...]:
    r = _durfee(parts)
    cols = [sum(1 for x in parts if x > j) for j in range(r)]
    return tuple(parts[i] - i + cols[i] - i - 1 for i in range(r))


def _is_square_times_hook(parts) -> bool:
    # Du_s * (a+1, 1^l) is an x-by-(s+a+1) block over an (s+l+1)-by-x block, x = s+1
    for x in range(1, len(parts) + 1):
        head, tail = parts[:x], parts[x:]
        if head[0] == head[-1] >= x and all(p == x for p in tail):
            return True
    return False


def _predicate(filters: dict):
    checks = []
    for key, want in filters.items():
        if key == "durfee":
            checks.append(lambda p, w=want: _durfee(p) == w)
        elif key == "hooktype":
            checks.append(lambda p, w=tuple(want): _diagonal_hooks(p) == w)
        elif key == "diffset":
            target = sorted(want)

            def check(p, target=target):
                h = _diagonal_hooks(p)
                ds = [h[i] - h[i + 1] - 1 for i in range(len(h) - 1)] + [h[-1]]
                return sorted(ds) == target

            checks.append(check)
        elif key == "inner":
            checks.append(lambda p, w=want: _diagonal_hooks(p)[-1] == w)
        elif key == "outer":
            checks.append(lambda p, w=want: p[0] + len(p) - 1 == w)
        elif key == "du_times_hook":
            if want:
                checks.append(_is_square_times_hook)
        elif key == "parts_pm1_mod5":
            if want:
                checks.append(lambda p: all(x % 5 in (1, 4) for x in p))
        else:
            raise ValueError(f"unknown filter {key!r}")
    return lambda p: all(c(p) for c in checks)


def count_where(n: int, **filters) -> int:
    """Count partitions of ``n`` satisfying every given filter by scanning them all.

    Filters: ``durfee=r``, ``hooktype=(k_1, ...)``, ``diffset=(d, ...)``,
    ``inner=k``, ``outer=k``, ``du_times_hook=True``, ``parts_pm1_mod5=True``.
    Filters combine with "and".

    ``du_times_hook`` scans only partitions with at most two distinct part
    sizes, a family that contains every square-times-hook shape; this keeps
    it usable at n = 100.
    """
    keep = _predicate(filters)
    if filters.get("du_times_hook") and set(filters) == {"du_times_hook"}:
        source = enumerate_two_valued(n)
    else:
        source = _zs1(n)
    return sum(1 for p in source if p and keep(p))


@lru_cache(maxsize=None)
def _tally(n: int, key: str) -> Counter:
    if key == "durfee":
        stat = _durfee
    elif key == "hooktype":
        stat = _diagonal_hooks
    else:
        raise ValueError(f"cannot tally by {key!r}")
    return Counter(stat(p) for p in _zs1(n))


def tally(n: int, key: str) -> Counter:
    """Histogram of ``durfee`` or ``hooktype`` over all partitions of ``n`` (cached)."""
    return Counter(_tally(n, key))


def pentagonal_counts(limit: int) -> list[int]:
    """``p(0), ..., p(limit)`` by Euler's pentagonal number recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p
