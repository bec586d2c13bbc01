"""Colored integers, Type-1 gap conditions, and the two transforms.

Every colored symbol sits at an integer *position* on the index line

    e1 < a1 < f1 < b1 < c1 < d2 < e2 < a2 < f2 < b2 < c2 < d3 < ...

(``e1`` and ``f1`` are placeholders that never occur, ``d1`` is absent).
Positions coincide with the modulus-6 part sizes, so one enumeration over
positions serves the standard, the quadratic and the untransformed world.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .partitions import DISTINCT, enumerate_partitions
from .polyq import LaurentPoly

PRIMARY = ("a", "b", "c")
SECONDARY = ("ab", "ac", "bc")
COLORS = PRIMARY + SECONDARY
# class order used for the multiplicities (alpha, beta, gamma, delta, epsilon, phi)
CLASS_ORDER = ("a", "b", "c", "ab", "ac", "bc")

# position = 6*value - offset
_OFFSET = {"a": 4, "b": 2, "c": 1, "ab": 6, "ac": 5, "bc": 3}
_COLOR_AT = {2: "a", 4: "b", 5: "c", 0: "ab", 1: "ac", 3: "bc"}


class Transform(enum.Enum):
    STANDARD = "standard"  # q -> q^6, a -> aq^-4, b -> bq^-2, c -> cq^-1
    QUADRATIC = "quadratic"  # q -> q^2, a -> aq^-1, b -> bq^-1
    PLAIN = "plain"  # no transform: a symbol weighs its integer value


@dataclass(frozen=True, order=True)
class ColorSymbol:
    value: int
    color: str

    def __post_init__(self):
        if self.color not in COLORS:
            raise ValueError(f"unknown color {self.color!r}")
        if self.value < 1 or (self.color in SECONDARY and self.value < 2):
            raise ValueError(f"symbol {self.value}_{self.color} does not occur")

    @property
    def kind(self) -> str:
        return "primary" if self.color in PRIMARY else "secondary"

    @property
    def is_secondary(self) -> bool:
        return self.color in SECONDARY

    @classmethod
    def at(cls, pos: int) -> ColorSymbol:
        """The symbol occupying a position of the index line."""
        color = _COLOR_AT[pos % 6]
        return cls((pos + _OFFSET[color]) // 6, color)

    def monomial(self) -> LaurentPoly:
        return LaurentPoly.monomial(1, **Counter(self.color))

    def __str__(self) -> str:
        return f"{self.value}_{self.color}"


def position(s: ColorSymbol) -> int:
    """Index-line position, which is also the standard-transform part size."""
    return 6 * s.value - _OFFSET[s.color]


def quadratic_value(s: ColorSymbol) -> int:
    v = s.value
    if s.color == "c":
        return 2 * v
    if s.color == "ab":
        return 2 * v - 2
    return 2 * v - 1


def _valid_position(pos: int) -> bool:
    return pos >= 2 and pos != 3


def _secondary_position(pos: int) -> bool:
    return pos % 6 in (0, 1, 3)


def _quadratic_at(pos: int) -> int:
    m, r = divmod(pos, 6)
    return 2 * m + (0 if r == 0 else 2 if r == 5 else 1)


def _weight_of_position(transform: Transform):
    if transform is Transform.STANDARD:
        return lambda p: p
    if transform is Transform.PLAIN:
        return lambda p: p // 6 + 1
    if transform is Transform.QUADRATIC:
        return _quadratic_at
    raise ValueError(f"unknown transform {transform!r}")


def transformed_value(s: ColorSymbol, transform: Transform) -> int:
    return _weight_of_position(transform)(position(s))


@dataclass(frozen=True)
class ColoredPartition:
    """Symbols listed from the largest position down."""

    symbols: tuple[ColorSymbol, ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(position(s) for s in self.symbols)

    @property
    def monomial(self) -> LaurentPoly:
        letters = Counter()
        for s in self.symbols:
            letters.update(s.color)
        return LaurentPoly.monomial(1, **letters)

    @property
    def color_counts(self) -> tuple[int, int, int, int, int, int]:
        """Multiplicities (alpha, beta, gamma, delta, epsilon, phi)."""
        counts = Counter(s.color for s in self.symbols)
        return tuple(counts[col] for col in CLASS_ORDER)

    def transformed_sum(self, transform: Transform) -> int:
        return sum(transformed_value(s, transform) for s in self.symbols)

    def transformed_parts(self, transform: Transform) -> tuple[int, ...]:
        return tuple(transformed_value(s, transform) for s in self.symbols)

    def is_type1(self) -> bool:
        pos = self.positions
        if any(not _valid_position(p) for p in pos):
            return False
        for hi, lo in zip(pos, pos[1:]):
            need = 7 if _secondary_position(hi) else 6
            if hi - lo < need:
                return False
        return True

    def __str__(self) -> str:
        return " + ".join(map(str, self.symbols)) or "0"


def _type1_positions(budget: int, weight, max_parts: int | None) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (total, positions) for all Type-1 words with total <= budget.

    Positions are built smallest first; the weight of a position is
    nondecreasing along the index line for every transform, which lets the
    scan stop as soon as one symbol no longer fits.
    """
    stack: list[int] = []

    def extend(lowest: int, remaining: int, total: int):
        yield total, tuple(reversed(stack))
        if max_parts is not None and len(stack) >= max_parts:
            return
        p = lowest
        while True:
            w = weight(p)
            if w > remaining:
                return
            if _valid_position(p):
                if stack and _secondary_position(p) and p - stack[-1] < 7:
                    p += 1
                    continue
                stack.append(p)
                yield from extend(p + 6, remaining - w, total + w)
                stack.pop()
            p += 1

    yield from extend(2, budget, 0)


def type1_up_to(max_total: int, transform: Transform, max_parts: int | None = None) -> Iterator[tuple[int, ColoredPartition]]:
    """All Type-1 partitions of transformed size at most ``max_total``."""
    weight = _weight_of_position(transform)
    for total, pos in _type1_positions(max_total, weight, max_parts):
        yield total, ColoredPartition(tuple(ColorSymbol.at(p) for p in pos))


def enumerate_type1(n: int, transform: Transform = Transform.STANDARD) -> Iterator[ColoredPartition]:
    """Type-1 partitions whose transformed parts sum to ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for total, cp in type1_up_to(n, transform):
        if total == n:
            yield cp


def type1_monomial_sum(n: int, transform: Transform = Transform.QUADRATIC) -> LaurentPoly:
    """Sum of color monomials over the Type-1 partitions of ``n``."""
    terms: Counter = Counter()
    for cp in enumerate_type1(n, transform):
        terms.update(cp.monomial.terms)
    return LaurentPoly(terms)


_B_RESIDUES = frozenset((2, 4, 5))


def goellnitz_counts(n: int) -> tuple[int, int]:
    """(B(n), C(n)) of the Goellnitz theorem."""
    big_b = sum(
        1 for p in enumerate_partitions(n, DISTINCT) if all(x % 6 in _B_RESIDUES for x in p)
    )
    big_c = sum(1 for _ in enumerate_type1(n, Transform.STANDARD))
    return big_b, big_c


def goellnitz_difference_count(n: int) -> int:
    """C(n) straight from the integer difference conditions.

    Parts m_1 > ... > m_v with m_v not 1 or 3, and m_i - m_{i+1} >= 6, strictly
    when m_i is 0, 1 or 3 mod 6. Independent of the symbol machinery.
    """

    def rec(remaining: int, below: int | None) -> int:
        if remaining == 0:
            return 1
        total = 0
        # choose the next smaller part m
        top = remaining if below is None else min(remaining, below)
        for m in range(top, 0, -1):
            if below is not None:
                need = 7 if below % 6 in (0, 1, 3) else 6
                if below - m < need:
                    continue
            rest = remaining - m
            if rest == 0:
                if m not in (1, 3):
                    total += 1
            else:
                total += rec(rest, m)
        return total

    if n == 0:
        return 1
    return rec(n, None)


def refined_counts(n: int, transform: Transform = Transform.STANDARD) -> dict[tuple[int, ...], int]:
    """Type-1 partitions of ``n`` keyed by (alpha, beta, gamma, delta, epsilon, phi)."""
    return dict(Counter(cp.color_counts for cp in enumerate_type1(n, transform)))


def _distinct_partitions_upto(n: int) -> list[list[tuple[int, ...]]]:
    return [[p.parts for p in enumerate_partitions(m, DISTINCT)] for m in range(n + 1)]


def vector_counts(n: int) -> dict[tuple[int, int, int], int]:
    """Triples of distinct-part partitions of total ``n`` keyed by part counts."""
    by_size = _distinct_partitions_upto(n)
    out: Counter = Counter()
    for n1 in range(n + 1):
        for n2 in range(n + 1 - n1):
            n3 = n - n1 - n2
            for p1 in by_size[n1]:
                for p2 in by_size[n2]:
                    for p3 in by_size[n3]:
                        out[(len(p1), len(p2), len(p3))] += 1
    return dict(out)


def aggregate_to_vector(refined: dict[tuple[int, ...], int]) -> dict[tuple[int, int, int], int]:
    """Collapse color classes to (i, j, k) = (a-, b-, c-letter counts)."""
    out: Counter = Counter()
    for (al, be, ga, de, ep, ph), m in refined.items():
        out[(al + de + ep, be + de + ph, ga + ep + ph)] += m
    return dict(out)


def class_series_counts(max_n: int, max_s: int, transform: Transform = Transform.PLAIN) -> dict[tuple[int, ...], list[int]]:
    """Per color class, the counts of Type-1 partitions of each size up to ``max_n``.

    Only classes with at most ``max_s`` symbols are collected.
    """
    out: dict[tuple[int, ...], list[int]] = {}
    for total, cp in type1_up_to(max_n, transform, max_parts=max_s):
        key = cp.color_counts
        row = out.setdefault(key, [0] * (max_n + 1))
        row[total] += 1
    return out
