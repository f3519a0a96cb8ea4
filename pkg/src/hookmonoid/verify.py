"""Deterministic cross-check sweep used by ``hookmonoid verify``.

Each check compares the package's constructions with brute-force
enumeration (or with an independent formula) for all weights up to a
bound.  Checks run in a fixed order; :func:`run_checks` yields one
:class:`~hookmonoid.records.CheckRecord` per check.
"""

from __future__ import annotations

from itertools import product as cartesian
from math import isqrt
from typing import Callable, Iterator

from . import counting, oracle, quotient, series
from .monoid import factor, product, product_all
from .partitions import EMPTY, delta_of, hook_type
from .records import CheckRecord


def _partitions_up_to(n: int):
    for m in range(n + 1):
        yield from oracle.enumerate_partitions(m)


def _check_pn(max_n: int):
    for n in range(1, max_n + 1):
        values = {
            "hooktypes": counting.p_n(n),
            "hdecomp": counting.p_hdecomp(n),
            "series": series.gf_pn_coeff(n, N=max(n, series.DEFAULT_N)),
            "oracle": sum(oracle.tally(n, "durfee").values()),
        }
        if len(set(values.values())) != 1:
            return f"p({n}) disagrees: {values}"


def _check_pnr(max_n: int):
    for n in range(1, max_n + 1):
        durfee = oracle.tally(n, "durfee")
        for r in range(1, isqrt(n) + 1):
            values = {
                "sum": counting.p_nr(n, r, "sum"),
                "recurrence": counting.p_nr(n, r, "recurrence"),
                "product_gf": series.gf_pnr_coeff(n, r, "product", N=max(n, series.DEFAULT_N)),
                "derivative_gf": series.gf_pnr_coeff(n, r, "derivative", N=max(n, series.DEFAULT_N)),
                "oracle": durfee[r],
            }
            if r in (2, 3):
                values["closed"] = counting.p_nr_closed(n, r)
            if len(set(values.values())) != 1:
                return f"p({n},{r}) disagrees: {values}"


def _check_hooktypes(max_n: int):
    for n in range(1, max_n + 1):
        seen = oracle.tally(n, "hooktype")
        for h in quotient.hooktypes_of_weight(n):
            if counting.p_hooktype(h) != seen[tuple(h)]:
                return f"p({tuple(h)}) = {counting.p_hooktype(h)}, oracle {seen[tuple(h)]}"
        if len(seen) != quotient.class_count(n):
            return f"class count of {n}: {quotient.class_count(n)}, oracle {len(seen)}"


def _check_factorization(max_n: int):
    for p in _partitions_up_to(min(max_n, 15)):
        hooks = factor(p)
        if product_all(hooks) != p:
            return f"factor({p}) does not multiply back"
        if p and tuple(h.size for h in hooks) != delta_of(hook_type(p)):
            return f"hook sizes of factor({p}) are not its difference sequence"


def _check_products(max_n: int):
    small = list(_partitions_up_to(min(max_n, 5)))
    for a, b in cartesian(small, repeat=2):
        ab = product(a, b)
        if ab.durfee != a.durfee + b.durfee:
            return f"durfee({a} * {b})"
        if ab.weight != a.weight + b.weight + a.durfee * b.outer_span:
            return f"weight({a} * {b})"
        if ab.conjugate() != product(a.conjugate(), b.conjugate()):
            return f"conjugate({a} * {b})"
        if factor(ab) != factor(a) + factor(b):
            return f"factor({a} * {b}) is not a concatenation"
        if quotient.phi3(ab) != quotient.phi3(a) @ quotient.phi3(b):
            return f"phi3({a} * {b})"
    for a, b, c in cartesian(list(_partitions_up_to(min(max_n, 3))), repeat=3):
        if product(product(a, b), c) != product(a, product(b, c)):
            return f"associativity fails on {a}, {b}, {c}"
    if any(product(EMPTY, a) != a or product(a, EMPTY) != a for a in small):
        return "empty partition is not an identity"


def _check_quotient(max_n: int):
    kinds = quotient.INDEX_SETS
    for n in range(1, max_n + 1):
        for h in quotient.hooktypes_of_weight(n):
            for src in kinds:
                v = quotient.index_convert(h, "hooktype", src, n)
                for dst in kinds:
                    w = quotient.index_convert(v, src, dst, n)
                    if quotient.index_convert(w, dst, src, n) != v:
                        return f"{src}->{dst}->{src} round trip fails on {tuple(v)} (n={n})"
        if quotient.class_count(n) != oracle.count_where(n, parts_pm1_mod5=True):
            return f"class_count({n}) != partitions of {n} into parts = +-1 mod 5"


def _check_dh(max_n: int):
    for n in range(1, max_n + 1):
        values = {
            "divisors": counting.dh(n),
            "series": series.gf_dh_coeff(n, N=max(n, series.DEFAULT_N)),
            "oracle": oracle.count_where(n, du_times_hook=True),
        }
        if len(set(values.values())) != 1:
            return f"dh({n}) disagrees: {values}"


CHECKS: list[tuple[str, Callable[[int], str | None]]] = [
    ("p(n): hook types = H_r decomposition = series = oracle", _check_pn),
    ("p(n,r): sum = recurrence = series = closed forms = oracle", _check_pnr),
    ("p(hook type) = oracle; class count = hook types seen", _check_hooktypes),
    ("hook factorization round trip", _check_factorization),
    ("product laws: du, weight, conjugation, factorization, phi3, associativity", _check_products),
    ("index-set round trips; class count = Rogers-Ramanujan count", _check_quotient),
    ("dh: divisor sum = series = oracle", _check_dh),
]


def run_checks(max_n: int) -> Iterator[CheckRecord]:
    for name, check in CHECKS:
        try:
            problem = check(max_n)
        except counting.ConsistencyError as exc:
            problem = str(exc)
        yield CheckRecord(name, problem is None, problem or "")
