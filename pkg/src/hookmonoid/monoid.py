"""The partition product and hook factorization.

``a * b`` places ``b`` inside ``a`` on the diagonal and widens every
central hook of ``a`` by one column as tall as ``b``'s first column and one
row as long as ``b``'s first row.  On Frobenius symbols this is a shift
followed by concatenation, which is how it is computed here.  The product
is associative with the empty partition as identity, and every partition
factors uniquely as a product of 1-hooks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from .partitions import EMPTY, FrobeniusSymbol, Partition

__all__ = [
    "Hook1",
    "product",
    "product_all",
    "peel_inner",
    "factor",
    "durfee_split",
    "durfee_square",
]


@dataclass(frozen=True)
class Hook1:
    """A single hook ``(arm + 1, 1^leg)``."""

    arm: int
    leg: int

    def __post_init__(self):
        if self.arm < 0 or self.leg < 0:
            raise ValueError(f"arm and leg must be non-negative: {self}")

    @property
    def size(self) -> int:
        return self.arm + self.leg + 1

    def as_partition(self) -> Partition:
        return Partition((self.arm + 1,) + (1,) * self.leg)

    @classmethod
    def from_partition(cls, p: Partition) -> "Hook1":
        if p.durfee != 1:
            raise ValueError(f"{p!r} is not a 1-hook")
        return cls(p.parts[0] - 1, len(p) - 1)


PartitionLike = Union[Partition, Hook1]


def _as_partition(x: PartitionLike) -> Partition:
    if isinstance(x, Hook1):
        return x.as_partition()
    if isinstance(x, Partition):
        return x
    return Partition(tuple(x))


def product(a: PartitionLike, b: PartitionLike) -> Partition:
    """The partition product ``a * b``.

    >>> product(Partition((1,)), Partition((1,)))
    Partition((2, 2))
    >>> product(Partition((2, 2)), Hook1(arm=1, leg=1))
    Partition((4, 4, 4, 3))
    """
    a, b = _as_partition(a), _as_partition(b)
    if not b:
        return a
    fa, fb = a.frobenius, b.frobenius
    row, col = b.parts[0], len(b)
    arms = tuple(x + row for x in fa.arms) + fb.arms
    legs = tuple(x + col for x in fa.legs) + fb.legs
    return FrobeniusSymbol(arms, legs).to_partition()


def product_all(factors: Iterable[PartitionLike]) -> Partition:
    return reduce(product, factors, EMPTY)


def durfee_square(s: int) -> Partition:
    return Partition((s,) * s)


def peel_inner(p: Partition) -> tuple[Partition, Hook1]:
    """Split off the inner hook: returns ``(q, h)`` with ``product(q, h) == p``."""
    if not p:
        raise ValueError("cannot peel a hook from the empty partition")
    f = p.frobenius
    h = Hook1(f.arms[-1], f.legs[-1])
    q = FrobeniusSymbol(
        tuple(x - h.arm - 1 for x in f.arms[:-1]),
        tuple(x - h.leg - 1 for x in f.legs[:-1]),
    ).to_partition()
    return q, h


def factor(p: Partition) -> list[Hook1]:
    """Unique hook factorization, outermost factor first.

    The hook sizes are the difference sequence of ``p``.

    >>> [h.size for h in factor(Partition((4, 4, 2, 1)))]
    [2, 4]
    """
    hooks = []
    while p:
        p, h = peel_inner(p)
        hooks.append(h)
    hooks.reverse()
    return hooks


def durfee_split(p: Partition) -> tuple[Partition, int]:
    """Write ``p = q * Du_s`` with ``s`` maximal.

    ``q`` then has no Durfee square as right factor (or is empty when ``p``
    is itself a square).
    """
    hooks = factor(p)
    s = 0
    while s < len(hooks) and hooks[-1 - s] == Hook1(0, 0):
        s += 1
    return product_all(hooks[: len(hooks) - s]), s
