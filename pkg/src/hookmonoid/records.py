"""JSON records emitted by the command line.

Partitions and other integer sequences are JSON arrays.  Counts that can
grow without bound (cardinalities, p(n) values) are decimal strings so
consumers need no big-integer support.  ``parse(type(r), emit(r)) == r``
holds for every record type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any

__all__ = [
    "CountRecord",
    "FactorRecord",
    "ProductRecord",
    "ConvertRecord",
    "MatrixRecord",
    "ClassRecord",
    "ExtremesRecord",
    "RenderRecord",
    "CheckRecord",
    "emit",
    "emit_many",
    "parse",
    "parse_many",
]


def _decimal():
    return field(metadata={"decimal": True})


@dataclass(frozen=True)
class CountRecord:
    query: str
    args: tuple
    method: str
    value: int = _decimal()


@dataclass(frozen=True)
class FactorRecord:
    partition: tuple
    hooks: tuple
    hooktype: tuple
    delta: tuple


@dataclass(frozen=True)
class ProductRecord:
    left: tuple
    right: tuple
    product: tuple


@dataclass(frozen=True)
class ConvertRecord:
    value: tuple
    source: str
    target: str
    n: int
    result: tuple


@dataclass(frozen=True)
class MatrixRecord:
    source: tuple
    shape: str
    matrix: tuple


@dataclass(frozen=True)
class ClassRecord:
    hooktype: tuple
    delta: tuple
    pi: tuple
    card: int = _decimal()


@dataclass(frozen=True)
class ExtremesRecord:
    diffset: tuple
    min: tuple
    min_weight: int
    max: tuple
    max_weight: int
    spread: int


@dataclass(frozen=True)
class RenderRecord:
    partition: tuple
    diagram: str


@dataclass(frozen=True)
class CheckRecord:
    name: str
    ok: bool
    detail: str


def _tuplify(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(_tuplify(v) for v in x)
    return x


def _to_dict(rec) -> dict:
    out = {}
    for f in fields(rec):
        v = getattr(rec, f.name)
        out[f.name] = str(v) if f.metadata.get("decimal") else v
    return out


def _from_dict(cls, d: dict):
    kwargs = {}
    for f in fields(cls):
        v = d[f.name]
        kwargs[f.name] = int(v) if f.metadata.get("decimal") else _tuplify(v)
    return cls(**kwargs)


def emit(rec) -> str:
    return json.dumps(_to_dict(rec))


def emit_many(recs) -> str:
    return json.dumps([_to_dict(r) for r in recs])


def parse(cls, text: str):
    return _from_dict(cls, json.loads(text))


def parse_many(cls, text: str) -> list:
    return [_from_dict(cls, d) for d in json.loads(text)]
