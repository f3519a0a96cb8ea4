"""Truncated power series with exact integer coefficients.

Only what the generating functions for hook counts need: products,
derivatives, monomial shifts, and the geometric expansions of
``1 / (1 - m)`` for a monomial ``m``.  There is no general inversion.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt
from typing import Iterable, Sequence

from .counting import ConsistencyError

__all__ = [
    "DEFAULT_N",
    "TruncationError",
    "Series",
    "MultiPoly",
    "pnr_series",
    "gf_pnr_coeff",
    "gf_pn_coeff",
    "gf_dh_coeff",
    "mv_series",
    "mv_coeff",
]


def _default_n() -> int:
    return int(os.environ.get("HOOKMONOID_SERIES_N", 128))


DEFAULT_N = _default_n()


class TruncationError(ValueError):
    """A coefficient was requested beyond the truncation order."""


class Series:
    """Coefficients ``c_0, ..., c_N`` of a power series known up to ``x^N``."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs: Iterable[int], N: int):
        c = list(coeffs)[: N + 1]
        c.extend([0] * (N + 1 - len(c)))
        self.coeffs = c
        self.N = N

    @classmethod
    def one(cls, N: int) -> "Series":
        return cls([1], N)

    @classmethod
    def monomial(cls, k: int, N: int) -> "Series":
        return cls([0] * k + [1], N)

    @classmethod
    def geometric(cls, i: int, N: int) -> "Series":
        """``1 / (1 - x^i)``."""
        return cls([1 if k % i == 0 else 0 for k in range(N + 1)], N)

    @classmethod
    def one_minus(cls, i: int, N: int) -> "Series":
        """``1 - x^i``."""
        c = [0] * (N + 1)
        c[0] = 1
        if i <= N:
            c[i] -= 1
        return cls(c, N)

    def __repr__(self):
        return f"Series({self.coeffs!r}, N={self.N})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __getitem__(self, n: int):
        return self.coefficient(n)

    def coefficient(self, n: int):
        if n > self.N:
            raise TruncationError(f"coefficient of x^{n} needs truncation order >= {n}, have {self.N}")
        return self.coeffs[n] if n >= 0 else 0

    def truncate(self, N: int) -> "Series":
        return Series(self.coeffs, min(N, self.N))

    def __add__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        return Series((a + b for a, b in zip(self.coeffs, other.coeffs)), N)

    def __sub__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        return Series((a - b for a, b in zip(self.coeffs, other.coeffs)), N)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series((other * a for a in self.coeffs), self.N)
        N = min(self.N, other.N)
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i in range(N + 1):
            ai = a[i]
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(out, N)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        out = Series.one(self.N)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "Series":
        """Multiply by ``x^k``; the truncation order is kept."""
        return Series([0] * k + self.coeffs, self.N)

    def derivative(self) -> "Series":
        """``d/dx``; known one order less than the input."""
        return Series((k * self.coeffs[k] for k in range(1, self.N + 1)), self.N - 1)


class MultiPoly:
    """Sparse polynomial in a few variables, truncated at total degree ``N``."""

    __slots__ = ("terms", "nvars", "N")

    def __init__(self, terms: dict, nvars: int, N: int):
        self.nvars = nvars
        self.N = N
        self.terms = {e: c for e, c in terms.items() if c and sum(e) <= N}
        for e in self.terms:
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")

    @classmethod
    def monomial(cls, exps: Sequence[int], N: int) -> "MultiPoly":
        return cls({tuple(exps): 1}, len(exps), N)

    @classmethod
    def geometric(cls, exps: Sequence[int], N: int, power: int = 1) -> "MultiPoly":
        """``(1 - m)^(-power)`` for the monomial ``m = x^exps``, power 1 or 2."""
        exps = tuple(exps)
        step = sum(exps)
        if step == 0:
            raise ValueError("geometric series needs a non-constant monomial")
        terms = {}
        for j in range(N // step + 1):
            coeff = 1 if power == 1 else j + 1
            terms[tuple(j * x for x in exps)] = coeff
        return cls(terms, len(exps), N)

    def __repr__(self):
        return f"MultiPoly({self.terms!r}, nvars={self.nvars}, N={self.N})"

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.nvars, self.N, self.terms) == (other.nvars, other.N, other.terms)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        N = min(self.N, other.N)
        out: dict = {}
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, cb in other.terms.items():
                if da + sum(eb) > N:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly(out, self.nvars, N)

    def partial(self, var: int) -> "MultiPoly":
        """``d/dx_var``; known one total degree less than the input."""
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                f = list(e)
                f[var] -= 1
                out[tuple(f)] = c * e[var]
        return MultiPoly(out, self.nvars, self.N - 1)

    def truncate(self, N: int) -> "MultiPoly":
        return MultiPoly(self.terms, self.nvars, min(N, self.N))

    def coefficient(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        if sum(exps) > self.N:
            raise TruncationError(f"total degree {sum(exps)} exceeds truncation {self.N}")
        return self.terms.get(exps, 0)


@lru_cache(maxsize=None)
def pnr_series(r: int, N: int, form: str = "product") -> Series:
    """Generating function of ``p(n, r)`` up to ``x^N``.

    ``form="product"``: ``x^(r^2) / prod (1 - x^i)^2``.
    ``form="derivative"``: ``x^(C(r+1,2)) * prod d/dx (1/(1 - x^i))``, which
    is ``r!`` times the same series; :func:`gf_pnr_coeff` divides.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if form == "product":
        s = Series.one(N)
        for i in range(1, r + 1):
            g = Series.geometric(i, N)
            s = s * g * g
        return s.shift(r * r)
    if form == "derivative":
        s = Series.one(N)
        for i in range(1, r + 1):
            s = s * Series.geometric(i, N + 1).derivative()
        return s.shift(comb(r + 1, 2))
    raise ValueError(f"unknown form {form!r}")


def _check_n(n: int, N: int):
    if n > N:
        raise TruncationError(f"coefficient of x^{n} needs truncation order >= {n}, have {N}")


def gf_pnr_coeff(n: int, r: int, form: str = "product", N: int | None = None) -> int:
    """Coefficient of ``x^n`` in the generating function of ``p(n, r)``.

    >>> gf_pnr_coeff(6, 2, "derivative")
    5
    """
    N = DEFAULT_N if N is None else N
    _check_n(n, N)
    c = pnr_series(r, N, form).coefficient(n)
    if form == "derivative":
        q = Fraction(c, factorial(r))
        if q.denominator != 1:
            raise ConsistencyError(f"derivative form of p({n},{r}) gave {q}")
        return q.numerator
    return c


def gf_pn_coeff(n: int, N: int | None = None) -> int:
    N = DEFAULT_N if N is None else N
    _check_n(n, N)
    return sum(gf_pnr_coeff(n, r, "product", N) for r in range(1, isqrt(n) + 1))


@lru_cache(maxsize=None)
def _dh_series(N: int) -> Series:
    total = Series([0], N)
    for r in range(1, isqrt(N) + 1):
        g = Series.geometric(r, N)
        total = total + (g * g).shift(r * r)
    return total


def gf_dh_coeff(n: int, N: int | None = None) -> int:
    """Coefficient of ``x^n`` in ``sum_{r>=1} x^(r^2) / (1 - x^r)^2``.

    This equals ``dh(n)``: the ``r``-th summand contributes ``n/r - r + 1``
    exactly when ``r`` divides ``n`` and ``r*r <= n``.
    """
    N = DEFAULT_N if N is None else N
    _check_n(n, N)
    return _dh_series(N).coefficient(n)


@lru_cache(maxsize=None)
def mv_series(r: int, N: int, form: str = "product") -> MultiPoly:
    """Hook-type generating function restricted to ``r`` hooks, to total degree ``N``.

    ``form="product"``: ``x_1^(2r-1) x_2^(2r-3) ... x_r * prod_i (1 - x_1...x_i)^(-2)``.
    ``form="derivative"``: ``x_1^r x_2^(r-1) ... x_r * prod_i d/dx_i (1 - x_1...x_i)^(-1)``.
    """
    if not 1 <= r <= 3:
        raise ValueError("multivariate expansion supports 1 <= r <= 3")
    prefixes = [tuple(1 if v <= i else 0 for v in range(r)) for i in range(r)]
    if form == "product":
        out = MultiPoly.monomial([2 * (r - v) - 1 for v in range(r)], N)
        for m in prefixes:
            out = out * MultiPoly.geometric(m, N, power=2)
    elif form == "derivative":
        out = MultiPoly.monomial([r - v for v in range(r)], N)
        for i, m in enumerate(prefixes):
            out = out * MultiPoly.geometric(m, N + 1).partial(i)
    else:
        raise ValueError(f"unknown form {form!r}")
    return out


def mv_coeff(h: Sequence[int], N: int | None = None, form: str = "product") -> int:
    """Coefficient of ``x_1^k_1 ... x_r^k_r`` in the ``r``-hook generating function.

    >>> mv_coeff((7, 4))
    8
    """
    h = tuple(h)
    r = len(h)
    if not 1 <= r <= 3:
        raise ValueError("multivariate expansion supports 1 <= r <= 3")
    N = sum(h) if N is None else N
    if sum(h) > N:
        raise TruncationError(f"total degree {sum(h)} exceeds truncation {N}")
    return mv_series(r, N, form).coefficient(h)
