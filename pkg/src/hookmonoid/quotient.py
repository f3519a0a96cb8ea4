"""Partitions modulo hook type.

Two partitions are congruent when they share a hook type; the classes
form a monoid whose product is concatenation of difference sequences.
Three index sets label the classes of weight ``n``: hook types, difference
sequences, and partitions of ``n - r*r`` with at most ``r`` parts (padded
with zeros to length ``r``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt, prod
from typing import Sequence

from .partitions import (
    BoundedPartition,
    DifferenceSequence,
    HookType,
    Partition,
    delta_of,
    delta_weight,
    hooktype_of,
)

__all__ = [
    "INDEX_SETS",
    "TriangularMatrix3",
    "index_convert",
    "hooktype_product",
    "delta_product",
    "pi_product",
    "class_cardinality",
    "phi3",
    "phi4",
    "class_count",
    "hooktypes_of_weight",
]

INDEX_SETS = ("hooktype", "delta", "pi")


@dataclass(frozen=True)
class TriangularMatrix3:
    """A 3x3 unit-triangular matrix of naturals, stored row-major."""

    entries: tuple[tuple[int, ...], ...]
    shape: str  # "lower" or "upper"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("expected a 3x3 matrix")
        if self.shape not in ("lower", "upper"):
            raise ValueError(f"unknown shape {self.shape!r}")
        for i in range(3):
            if rows[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(3):
                if (j > i if self.shape == "lower" else j < i) and rows[i][j] != 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) must vanish in a {self.shape} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, shape: str = "lower") -> "TriangularMatrix3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), shape)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "TriangularMatrix3") -> "TriangularMatrix3":
        if not isinstance(other, TriangularMatrix3):
            return NotImplemented
        if other.shape != self.shape:
            raise ValueError("cannot multiply lower and upper representations")
        a, b = self.entries, other.entries
        c = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))
        return TriangularMatrix3(c, self.shape)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.tolist())


def _check_member(value: Sequence[int], kind: str, n: int):
    """Validate ``value`` as an element of the ``kind`` index set at weight ``n``."""
    try:
        if kind == "hooktype":
            v = HookType(value)
            ok = len(v) >= 1 and sum(v) == n
        elif kind == "delta":
            v = DifferenceSequence(value)
            ok = len(v) >= 1 and delta_weight(v) == n
        elif kind == "pi":
            v = BoundedPartition(value)
            r = len(v)
            ok = r >= 1 and r * r <= n and sum(v) == n - r * r
        else:
            raise ValueError(f"unknown index set {kind!r}; expected one of {INDEX_SETS}")
    except ValueError as exc:
        raise ValueError(f"{tuple(value)} is not in the {kind} index set of {n}: {exc}") from None
    if not ok:
        raise ValueError(f"{tuple(value)} is not in the {kind} index set of {n}")
    return v


def _hooktype_to_pi(h):
    r = len(h)
    return BoundedPartition(k - (2 * (r - i) - 1) for i, k in enumerate(h))


def _pi_to_hooktype(mu):
    r = len(mu)
    return HookType(m + 2 * (r - i) - 1 for i, m in enumerate(mu))


def _delta_to_pi(d):
    mus, tail = [], 0
    for x in reversed(d):
        tail += x - 1
        mus.append(tail)
    return BoundedPartition(reversed(mus))


def _pi_to_delta(mu):
    r = len(mu)
    return DifferenceSequence(
        tuple(mu[i] - mu[i + 1] + 1 for i in range(r - 1)) + (mu[-1] + 1,)
    )


_MAPS = {
    ("hooktype", "delta"): delta_of,
    ("delta", "hooktype"): hooktype_of,
    ("hooktype", "pi"): _hooktype_to_pi,
    ("pi", "hooktype"): _pi_to_hooktype,
    ("delta", "pi"): _delta_to_pi,
    ("pi", "delta"): _pi_to_delta,
}


def index_convert(value: Sequence[int], source: str, target: str, n: int):
    """Translate a class label between index sets at weight ``n``.

    >>> index_convert((11, 2), "hooktype", "pi", 13)
    BoundedPartition((8, 1))
    >>> index_convert((4, 0, 0), "pi", "delta", 13)
    DifferenceSequence((5, 1, 1))
    """
    if target not in INDEX_SETS:
        raise ValueError(f"unknown index set {target!r}; expected one of {INDEX_SETS}")
    v = _check_member(value, source, n)
    if source == target:
        return v
    return _MAPS[source, target](v)


def hooktype_product(h1: Sequence[int], h2: Sequence[int]) -> HookType:
    if not h2:
        return HookType(h1)
    shift = h2[0] + 1
    return HookType(tuple(k + shift for k in h1) + tuple(h2))


def delta_product(d1: Sequence[int], d2: Sequence[int]) -> DifferenceSequence:
    return DifferenceSequence(tuple(d1) + tuple(d2))


def pi_product(mu: Sequence[int], lam: Sequence[int]) -> BoundedPartition:
    if not lam:
        return BoundedPartition(mu)
    return BoundedPartition(tuple(m + lam[0] for m in mu) + tuple(lam))


def class_cardinality(d: Sequence[int]) -> int:
    """Number of partitions whose difference sequence is ``d``: the product of its entries."""
    return prod(DifferenceSequence(d))


def phi3(p: Partition) -> TriangularMatrix3:
    """Lower triangular representation of the partition monoid.

    >>> phi3(Partition((2, 2))).tolist()
    [[1, 0, 0], [4, 1, 0], [4, 2, 1]]
    """
    return TriangularMatrix3(
        ((1, 0, 0), (p.outer_span, 1, 0), (p.weight, p.durfee, 1)),
        "lower",
    )


def phi4(d: Sequence[int]) -> TriangularMatrix3:
    # the (1,2) entry is the length of d; a constant 1 would not be multiplicative
    d = DifferenceSequence(d)
    moment = sum(i * x for i, x in enumerate(d, start=1))
    return TriangularMatrix3(((1, len(d), moment), (0, 1, sum(d)), (0, 0, 1)), "upper")


def _hooktypes_desc(n: int, r: int, cap: int):
    # hook types of weight n with r entries and k_1 <= cap, largest k_1 first
    if r == 0:
        if n == 0:
            yield ()
        return
    # the tail (k_2, ..., k_r) weighs at least (r-1)^2
    top = min(cap, n - (r - 1) ** 2)
    # k_1 is the largest of r terms spaced by 2
    bottom = -(-(n + r * (r - 1)) // r)
    for k in range(top, max(bottom, 1) - 1, -1):
        for rest in _hooktypes_desc(n - k, r - 1, k - 2):
            yield (k,) + rest


def hooktypes_of_weight(n: int, r: int | None = None) -> list[HookType]:
    """Hook types of weight ``n`` (of length ``r`` if given), in decreasing lexicographic order."""
    if r is None:
        out = []
        for rr in range(1, isqrt(n) + 1):
            out.extend(hooktypes_of_weight(n, rr))
        return out
    if r < 1 or n < r * r:
        return []
    return [HookType(h) for h in _hooktypes_desc(n, r, n)]


def class_count(n: int) -> int:
    """Number of congruence classes of partitions of ``n`` (number of hook types of weight n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return len(hooktypes_of_weight(n))
