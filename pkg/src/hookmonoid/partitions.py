"""Integer partitions and their central-hook coordinates.

A partition is stored by its parts.  Every non-empty partition is the
diagonal superposition of its central hooks, one per cell of the main
diagonal; the Frobenius symbol records the arm and leg of each of them.
From the hook sizes ``(k_1, ..., k_r)`` (outermost first) we get the hook
type and from that the difference sequence::

    (k_1 - k_2 - 1, ..., k_{r-1} - k_r - 1, k_r)

whose weight ``sum(i * d_i) + C(r, 2)`` is the weight of the partition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "FrobeniusSymbol",
    "HookType",
    "DifferenceSequence",
    "BoundedPartition",
    "EMPTY",
    "conjugate",
    "to_frobenius",
    "from_frobenius",
    "hook_type",
    "delta_of",
    "hooktype_of",
    "delta_weight",
    "render",
]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    The empty partition is a legitimate value (weight 0, Durfee size 0).

    >>> p = Partition((4, 4, 2, 1))
    >>> p.weight, p.durfee, p.conjugate()
    (11, 2, Partition((4, 3, 2, 2)))
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"4,4,2,1"``; the empty string and ``"0"`` both mean the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed partition: {text!r}") from None
        return cls(parts)

    def to_json(self) -> str:
        return json.dumps({"parts": list(self.parts)})

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(tuple(json.loads(text)["parts"]))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @cached_property
    def durfee(self) -> int:
        r = 0
        while r < len(self.parts) and self.parts[r] >= r + 1:
            r += 1
        return r

    @cached_property
    def _conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def conjugate(self) -> "Partition":
        return self._conjugate

    @cached_property
    def frobenius(self) -> "FrobeniusSymbol":
        cols = self._conjugate.parts
        r = self.durfee
        return FrobeniusSymbol(
            tuple(self.parts[i] - i - 1 for i in range(r)),
            tuple(cols[i] - i - 1 for i in range(r)),
        )

    @property
    def hook_sizes(self) -> tuple[int, ...]:
        f = self.frobenius
        return tuple(a + b + 1 for a, b in zip(f.arms, f.legs))

    @property
    def outer_hook_size(self) -> int:
        """Cell count of the outermost central hook; 0 for the empty partition."""
        if not self.parts:
            return 0
        return self.parts[0] + len(self.parts) - 1

    @property
    def outer_span(self) -> int:
        """``outer_hook_size + 1``, taken to be 0 on the empty partition.

        This is the amount each hook of the left factor grows by in a
        product, and the (2,1) entry of the lower triangular representation.
        """
        if not self.parts:
            return 0
        return self.parts[0] + len(self.parts)

    @property
    def inner_hook_size(self) -> int:
        if not self.parts:
            return 0
        return self.hook_sizes[-1]

    def is_square(self) -> bool:
        r = self.durfee
        return self.parts == (r,) * r


EMPTY = Partition(())


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Arm and leg lengths of the central hooks, outermost first."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        arms, legs = tuple(self.arms), tuple(self.legs)
        if len(arms) != len(legs):
            raise ValueError("arms and legs must have the same length")
        for name, seq in (("arms", arms), ("legs", legs)):
            if any(x < 0 for x in seq):
                raise ValueError(f"{name} must be non-negative: {seq}")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be strictly decreasing: {seq}")
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)

    def __len__(self):
        return len(self.arms)

    @property
    def weight(self) -> int:
        return sum(a + b + 1 for a, b in zip(self.arms, self.legs))

    def to_partition(self) -> Partition:
        r = len(self.arms)
        if r == 0:
            return EMPTY
        rows = [a + i + 1 for i, a in enumerate(self.arms)]
        cols = [b + j + 1 for j, b in enumerate(self.legs)]
        # below the Durfee square, row i meets every diagonal column longer than i
        for i in range(r, cols[0]):
            rows.append(sum(1 for c in cols if c > i))
        return Partition(tuple(rows))


class HookType(tuple):
    """Central hook sizes ``(k_1, ..., k_r)`` with ``k_i >= k_{i+1} + 2`` and ``k_r >= 1``."""

    def __new__(cls, ks: Iterable[int] = ()):
        ks = tuple(int(k) for k in ks)
        if ks and ks[-1] < 1:
            raise ValueError(f"hook sizes must be positive: {ks}")
        for i in range(len(ks) - 1):
            if ks[i] < ks[i + 1] + 2:
                raise ValueError(f"not a hook type (need k_i >= k_(i+1) + 2): {ks}")
        return super().__new__(cls, ks)

    def __repr__(self):
        return f"HookType({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)


class DifferenceSequence(tuple):
    """Positive integers ``(d_1, ..., d_r)``; the free coordinates of a hook type."""

    def __new__(cls, ds: Iterable[int] = ()):
        ds = tuple(int(d) for d in ds)
        if any(d < 1 for d in ds):
            raise ValueError(f"difference sequence entries must be positive: {ds}")
        return super().__new__(cls, ds)

    def __repr__(self):
        return f"DifferenceSequence({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return delta_weight(self)


class BoundedPartition(tuple):
    """A partition of ``n - r*r`` padded with zeros to exactly ``r`` entries."""

    def __new__(cls, mus: Iterable[int] = ()):
        mus = tuple(int(m) for m in mus)
        if any(m < 0 for m in mus):
            raise ValueError(f"entries must be non-negative: {mus}")
        if any(mus[i] < mus[i + 1] for i in range(len(mus) - 1)):
            raise ValueError(f"entries must be weakly decreasing: {mus}")
        return super().__new__(cls, mus)

    def __repr__(self):
        return f"BoundedPartition({tuple(self)!r})"


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def to_frobenius(p: Partition) -> FrobeniusSymbol:
    return p.frobenius


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    """Inverse of :func:`to_frobenius`.

    >>> from_frobenius(FrobeniusSymbol((3, 2, 1), (3, 2, 1)))
    Partition((4, 4, 4, 3))
    """
    if not isinstance(f, FrobeniusSymbol):
        f = FrobeniusSymbol(*f)
    return f.to_partition()


def hook_type(p: Partition) -> HookType:
    if not p:
        raise ValueError("the empty partition has no hook type")
    return HookType(p.hook_sizes)


def delta_of(h: Sequence[int]) -> DifferenceSequence:
    """Difference sequence of a hook type.

    >>> delta_of(HookType((7, 4, 2)))
    DifferenceSequence((2, 1, 2))
    """
    h = HookType(h)
    if not h:
        return DifferenceSequence(())
    return DifferenceSequence(tuple(h[i] - h[i + 1] - 1 for i in range(len(h) - 1)) + (h[-1],))


def hooktype_of(d: Sequence[int]) -> HookType:
    d = DifferenceSequence(d)
    r = len(d)
    ks = []
    tail = 0
    for i in range(r - 1, -1, -1):
        tail += d[i]
        ks.append(r - 1 - i + tail)
    return HookType(reversed(ks))


def delta_weight(d: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(d, start=1)) + comb(len(d), 2)


_HOOK_MARKS = "#*o+x=%@&$" + "abcdefghijklmnopqrstuvwxyz"


def render(p: Partition, cartesian: bool = False, hooks: bool = False) -> str:
    """ASCII Ferrers diagram.

    Rows are printed largest first (English convention) unless ``cartesian``
    is set, in which case the largest row is at the bottom.  With ``hooks``
    every central hook gets its own character.

    >>> print(render(Partition((3, 1)), cartesian=True))
    #
    ###
    """
    rows = []
    for i, length in enumerate(p.parts):
        if hooks:
            rows.append("".join(_HOOK_MARKS[min(i, j) % len(_HOOK_MARKS)] for j in range(length)))
        else:
            rows.append("#" * length)
    if cartesian:
        rows.reverse()
    return "\n".join(rows)
