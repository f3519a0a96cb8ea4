"""Command line interface.

Exit status: 0 on success, 1 on a usage or input error, 2 when two
computations that must agree do not (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import counting, oracle, quotient, series
from .counting import ConsistencyError
from .monoid import factor, product
from .partitions import Partition, delta_of, delta_weight, hook_type, render
from .records import (
    ClassRecord,
    ConvertRecord,
    CountRecord,
    ExtremesRecord,
    FactorRecord,
    MatrixRecord,
    ProductRecord,
    RenderRecord,
    emit,
    emit_many,
)
from .verify import run_checks

USAGE_ERROR = 1
CONSISTENCY_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(seq) -> str:
    return "(" + ",".join(map(str, seq)) + ")"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hookmonoid", description="Central-hook calculus on integer partitions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = sub.add_parser("count", help="count partitions")
    csub = count.add_subparsers(dest="what", required=True, parser_class=_Parser)
    c_n = csub.add_parser("n", help="p(n)")
    c_n.add_argument("n", type=int)
    c_n.add_argument("--method", choices=["hooktypes", "series", "hdecomp", "oracle"], default="hooktypes")
    c_nr = csub.add_parser("nr", help="p(n, r): partitions of n with an r x r Durfee square")
    c_nr.add_argument("n", type=int)
    c_nr.add_argument("r", type=int)
    c_nr.add_argument("--method", choices=["sum", "recurrence", "closed", "series", "oracle"], default="sum")
    c_h = csub.add_parser("hooktype", help="partitions with a given hook type")
    c_h.add_argument("hooktype", type=_ints)

    f = sub.add_parser("factor", help="hook factorization of a partition")
    f.add_argument("partition", type=_partition)

    p = sub.add_parser("product", help="partition product p * q")
    p.add_argument("left", type=_partition)
    p.add_argument("right", type=_partition)

    c = sub.add_parser("convert", help="translate a class label between index sets")
    c.add_argument("value", type=_ints)
    c.add_argument("--from", dest="source", choices=quotient.INDEX_SETS, required=True)
    c.add_argument("--to", dest="target", choices=quotient.INDEX_SETS, required=True)
    c.add_argument("--n", type=int, required=True)

    m = sub.add_parser("matrix", help="triangular matrix of a partition or difference sequence")
    m.add_argument("partition", type=_partition, nargs="?")
    m.add_argument("--delta", type=_ints)

    d = sub.add_parser("dh", help="number of (Durfee square) * (1-hook) partitions of n")
    d.add_argument("n", type=int)

    cl = sub.add_parser("classes", help="hook-type classes of weight n with their cardinalities")
    cl.add_argument("n", type=int)

    e = sub.add_parser("extremes", help="lightest and heaviest orderings of a difference set")
    e.add_argument("diffset", type=_ints)

    rd = sub.add_parser("render", help="draw a Ferrers diagram")
    rd.add_argument("partition", type=_partition)
    rd.add_argument("--cartesian", action="store_true", help="largest row at the bottom")
    rd.add_argument("--hooks", action="store_true", help="mark each central hook")

    v = sub.add_parser("verify", help="cross-check everything against brute-force enumeration")
    v.add_argument("--max-n", type=int, default=20)
    return parser


def _positive(n: int, name: str = "n"):
    if n < 1:
        raise UsageError(f"{name} must be positive")


def _count(args):
    if args.what == "n":
        _positive(args.n)
        if args.method == "hooktypes":
            value = counting.p_n(args.n)
        elif args.method == "hdecomp":
            value = counting.p_hdecomp(args.n)
        elif args.method == "series":
            value = series.gf_pn_coeff(args.n, N=max(args.n, series.DEFAULT_N))
        else:
            value = sum(1 for _ in oracle.enumerate_partitions(args.n))
        return CountRecord("n", (args.n,), args.method, value)
    if args.what == "nr":
        _positive(args.n)
        _positive(args.r, "r")
        n, r = args.n, args.r
        if args.method in ("sum", "recurrence"):
            value = counting.p_nr(n, r, args.method)
        elif args.method == "closed":
            value = counting.p_nr_closed(n, r)
        elif args.method == "series":
            value = series.gf_pnr_coeff(n, r, "product", N=max(n, series.DEFAULT_N))
        else:
            value = oracle.count_where(n, durfee=r)
        return CountRecord("nr", (n, r), args.method, value)
    return CountRecord("hooktype", args.hooktype, "product", counting.p_hooktype(args.hooktype))


def _classes(n: int) -> list[ClassRecord]:
    _positive(n)
    out = []
    for h in quotient.hooktypes_of_weight(n):
        d = delta_of(h)
        mu = quotient.index_convert(h, "hooktype", "pi", n)
        out.append(ClassRecord(tuple(h), tuple(d), tuple(mu), quotient.class_cardinality(d)))
    return out


def _dispatch(args):
    cmd = args.command
    if cmd == "count":
        return _count(args)
    if cmd == "factor":
        p = args.partition
        hooks = tuple(h.as_partition().parts for h in factor(p))
        ht = tuple(hook_type(p)) if p else ()
        return FactorRecord(p.parts, hooks, ht, tuple(delta_of(ht)))
    if cmd == "product":
        return ProductRecord(args.left.parts, args.right.parts, product(args.left, args.right).parts)
    if cmd == "convert":
        result = quotient.index_convert(args.value, args.source, args.target, args.n)
        return ConvertRecord(args.value, args.source, args.target, args.n, tuple(result))
    if cmd == "matrix":
        if args.delta is not None:
            if args.partition is not None:
                raise UsageError("give either a partition or --delta, not both")
            mat = quotient.phi4(args.delta)
            return MatrixRecord(args.delta, mat.shape, mat.entries)
        if args.partition is None:
            raise UsageError("matrix needs a partition or --delta")
        mat = quotient.phi3(args.partition)
        return MatrixRecord(args.partition.parts, mat.shape, mat.entries)
    if cmd == "dh":
        _positive(args.n)
        return CountRecord("dh", (args.n,), "divisors", counting.dh(args.n))
    if cmd == "classes":
        return _classes(args.n)
    if cmd == "extremes":
        if not args.diffset:
            raise UsageError("difference set must be non-empty")
        lo, hi, spread = counting.weight_extremes(args.diffset)
        return ExtremesRecord(
            tuple(sorted(args.diffset, reverse=True)),
            tuple(lo), delta_weight(lo), tuple(hi), delta_weight(hi), spread,
        )
    if cmd == "render":
        return RenderRecord(args.partition.parts, render(args.partition, args.cartesian, args.hooks))
    raise UsageError(f"unknown command {cmd!r}")


def _text(rec) -> str:
    if isinstance(rec, list):
        lines = [f"{'hooktype':<16}{'delta':<16}{'pi':<16}{'r':>3}{'card':>8}"]
        for c in rec:
            lines.append(f"{_fmt(c.hooktype):<16}{_fmt(c.delta):<16}{_fmt(c.pi):<16}{len(c.hooktype):>3}{c.card:>8}")
        lines.append(f"{len(rec)} classes, total {sum(c.card for c in rec)}")
        return "\n".join(lines)
    if isinstance(rec, CountRecord):
        return str(rec.value)
    if isinstance(rec, FactorRecord):
        hooks = ",".join("[" + ",".join(map(str, h)) + "]" for h in rec.hooks)
        return f"hooks: {hooks}\nhooktype: {_fmt(rec.hooktype)}\ndelta: {_fmt(rec.delta)}"
    if isinstance(rec, ProductRecord):
        return ",".join(map(str, rec.product))
    if isinstance(rec, ConvertRecord):
        return _fmt(rec.result)
    if isinstance(rec, MatrixRecord):
        return "\n".join(" ".join(str(x) for x in row) for row in rec.matrix)
    if isinstance(rec, ExtremesRecord):
        return (
            f"min {_fmt(rec.min)} weight {rec.min_weight}\n"
            f"max {_fmt(rec.max)} weight {rec.max_weight}\n"
            f"spread {rec.spread}"
        )
    if isinstance(rec, RenderRecord):
        return rec.diagram
    raise TypeError(type(rec))


def _verify(max_n: int, as_json: bool, out) -> int:
    if max_n < 1:
        raise UsageError("--max-n must be positive")
    done = []
    for check in run_checks(max_n):
        done.append(check)
        if not as_json:
            status = "ok  " if check.ok else "FAIL"
            print(f"{status} {check.name}" + (f": {check.detail}" if check.detail else ""), file=out)
        if not check.ok:
            break
    if as_json:
        print(emit_many(done), file=out)
    return 0 if all(c.ok for c in done) else CONSISTENCY_ERROR


def run(argv: Sequence[str], out=None, err=None) -> int:
    """Run one command; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return _verify(args.max_n, as_json, out)
        rec = _dispatch(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(exc, file=err)
        return USAGE_ERROR
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=err)
        return CONSISTENCY_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return USAGE_ERROR
    if as_json:
        print(emit_many(rec) if isinstance(rec, list) else emit(rec), file=out)
    else:
        print(_text(rec), file=out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
