"""Command-line front end.

    rrweights verify T1 --max-n 10
    rrweights table A_6_1 --max-n 4 --format tsv
    rrweights series lebesgue_lhs --order 12
    rrweights weights 7,4,2 --kind OMEGA4

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Callable, Sequence

from . import identities as ids
from .harness import TheoremId, verify
from .partitions import DISTINCT, Partition, count
from .polyq import QSeries
from .weights import WeightKind, weight

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"bound must be nonnegative, got {value}")
    return value


def parse_partition(text: str) -> Partition:
    """Parse ``"7,4,2"``; parts must be positive and given largest first."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed partition {text!r}: expected comma-separated integers") from None
    if any(x < 1 for x in parts):
        raise UsageError(f"malformed partition {text!r}: parts must be positive")
    for x, y in zip(parts, parts[1:]):
        if y > x:
            raise UsageError(f"malformed partition {text!r}: parts must be listed largest first ({x} before {y})")
    return Partition(parts)


_PAIR = re.compile(r"^([QA])_(\d+)_(\d+)$")


def _pair_family(name: str) -> tuple[str, int, int] | None:
    m = _PAIR.match(name)
    if not m:
        return None
    k, i = int(m.group(2)), int(m.group(3))
    try:
        ids.rank_interval(k, i)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return m.group(1), k, i


def table_rows(family: str, max_n: int) -> list[tuple[int, str]]:
    """Rows ``(n, value)`` of a count family; raises UsageError on an unknown name."""
    pair = _pair_family(family)
    if pair is not None:
        side, k, i = pair
        if side == "Q":
            values = [ids.rank_count(n, k, i) for n in range(max_n + 1)]
        else:
            # the product form also covers k = 2i, which has no residue-class reading
            values = ids.modular_gf_ints(k, i, max_n)
        return [(n, str(v)) for n, v in enumerate(values)]
    if family == "D":
        return [(n, str(count(n, DISTINCT))) for n in range(max_n + 1)]
    try:
        kind = WeightKind[family]
    except KeyError:
        raise UsageError(f"unknown family {family!r}") from None
    return [(n, str(ids.rr_weight_sum(n, kind))) for n in range(max_n + 1)]


def _series_by_name(name: str, order: int) -> QSeries:
    pair = _pair_family(name)
    if pair is not None and pair[0] == "A":
        return ids.modular_gf(pair[1], pair[2], order)
    named: dict[str, Callable[[int], QSeries]] = {
        "vector_product": ids.vector_product,
        "theta": ids.theta_series,
        "jtp_lhs": lambda N: ids.jtp_sides(N)[0],
        "jtp_rhs": lambda N: ids.jtp_sides(N)[1],
        "key_lhs": lambda N: ids.key_identity_sides(N)[0],
        "key_rhs": lambda N: ids.key_identity_sides(N)[1],
        "lebesgue_lhs": lambda N: ids.lebesgue_sides(N)[0],
        "lebesgue_rhs": lambda N: ids.lebesgue_sides(N)[1],
        "goellnitz": lambda N: QSeries(ids.goellnitz_product_ints(N)),
        "signed_product": lambda N: QSeries(ids.signed_product_ints(N)),
    }
    if name not in named:
        raise UsageError(f"unknown series {name!r}; choose from A_k_i, {', '.join(sorted(named))}")
    return named[name](order)


SERIES_NAMES = (
    "A_k_i",
    "vector_product",
    "theta",
    "jtp_lhs",
    "jtp_rhs",
    "key_lhs",
    "key_rhs",
    "lebesgue_lhs",
    "lebesgue_rhs",
    "goellnitz",
    "signed_product",
)


def _render_rows(rows: list[tuple[int, str]], header: tuple[str, str], fmt: str, title: str) -> str:
    if fmt == "json":
        return json.dumps({"name": title, "rows": [{header[0]: k, header[1]: v} for k, v in rows]}, indent=2)
    if fmt == "tsv":
        return "\n".join([f"{header[0]}\t{header[1]}"] + [f"{k}\t{v}" for k, v in rows])
    width = max([len(str(k)) for k, _ in rows] + [len(header[0])])
    return "\n".join([title] + [f"{k:>{width}}  {v}" for k, v in rows])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrweights", description="Verify weighted Rogers-Ramanujan partition identities.")
    parser.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    parser.add_argument("-o", "--output", help="write to this file instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check one identity up to a bound")
    p.add_argument("theorem", help="one of: " + ", ".join(t.value for t in TheoremId))
    p.add_argument("--max-n", type=_nonneg, default=None, help="bound (max n, q-order or max L)")

    p = sub.add_parser("table", help="counts n -> value for a family")
    p.add_argument("family", help="Q_k_i, A_k_i, D or a weight kind such as OMEGA4")
    p.add_argument("--max-n", type=_nonneg, default=20)

    p = sub.add_parser("series", help="q-coefficients of a named generating function")
    p.add_argument("name", help="one of: " + ", ".join(SERIES_NAMES))
    p.add_argument("--order", type=_nonneg, default=20)

    p = sub.add_parser("weights", help="weight of one partition")
    p.add_argument("partition", help="parts largest first, comma-separated, e.g. 7,4,2")
    p.add_argument("--kind", required=True, help="one of: " + ", ".join(k.value for k in WeightKind))

    # allow --format/-o after the subcommand too
    for child in sub.choices.values():
        child.add_argument("--format", choices=("text", "json", "tsv"), default=argparse.SUPPRESS)
        child.add_argument("-o", "--output", default=argparse.SUPPRESS)
    return parser


def _execute(args: argparse.Namespace) -> tuple[str, int]:
    fmt = args.format
    if args.command == "verify":
        try:
            tid = TheoremId.parse(args.theorem)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = verify(tid, args.max_n)
        text = {"json": report.to_json, "tsv": report.to_tsv, "text": report.to_text}[fmt]()
        return text, EXIT_OK if report.passed else EXIT_MISMATCH

    if args.command == "table":
        rows = table_rows(args.family, args.max_n)
        return _render_rows(rows, ("n", "value"), fmt, args.family), EXIT_OK

    if args.command == "series":
        series = _series_by_name(args.name, args.order)
        rows = [(k, str(x)) for k, x in enumerate(series)]
        return _render_rows(rows, ("k", "coefficient"), fmt, args.name), EXIT_OK

    try:
        kind = WeightKind[args.kind.upper()]
    except KeyError:
        raise UsageError(f"unknown weight kind {args.kind!r}") from None
    part = parse_partition(args.partition)
    try:
        value = weight(part, kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if fmt == "json":
        return json.dumps({"partition": list(part.parts), "kind": kind.value, "weight": str(value)}), EXIT_OK
    if fmt == "tsv":
        return f"partition\tkind\tweight\n{','.join(map(str, part.parts))}\t{kind.value}\t{value}", EXIT_OK
    return str(value), EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, code = _execute(args)
    except UsageError as exc:
        print(f"rrweights: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())
