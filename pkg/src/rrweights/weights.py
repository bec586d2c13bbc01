"""Weight functions on Rogers-Ramanujan partitions.

The symbolic chain weight carries the free parameters a, b, c; every other
kind is an integer: a power of 2 counted over chains, or a product of
Fibonacci numbers over strings.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable
from functools import lru_cache

from .partitions import Chain, Partition, StringBlock, as_partition, chains, nu_d, strings
from .polyq import ONE, LaurentPoly, a, b, c


class WeightKind(enum.Enum):
    OMEGA_SYMBOLIC = "OMEGA_SYMBOLIC"
    OMEGA1 = "OMEGA1"
    THEOREM_A = "THEOREM_A"
    THEOREM_B = "THEOREM_B"
    OMEGA2 = "OMEGA2"
    OMEGA3 = "OMEGA3"
    OMEGA4 = "OMEGA4"
    OMEGA5 = "OMEGA5"
    OMEGA6 = "OMEGA6"
    OMEGA7 = "OMEGA7"

    @property
    def domain(self) -> str:
        if self is WeightKind.OMEGA1:
            return "odd"
        if self in (WeightKind.OMEGA2, WeightKind.OMEGA7):
            return "rr2"
        return "rr"


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    x, y = 0, 1
    for _ in range(n):
        x, y = y, x + y
    return x


def box_fillings(n: int) -> int:
    """Empty/filled assignments of ``n`` boxes in a row with no two adjacent empties.

    Counted by exhausting all 2**n assignments.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        1
        for filled in itertools.product((False, True), repeat=n)
        if not any(not x and not y for x, y in zip(filled, filled[1:]))
    )


def _mixed_sum(length: int) -> LaurentPoly:
    # sum_{k=1}^{length-1} a^k b^(length-k)
    return LaurentPoly({(k, length - k, 0, 0): 1 for k in range(1, length)})


@lru_cache(maxsize=None)
def _chain_weight(least: int, length: int) -> LaurentPoly:
    if least % 2 == 0:
        return c ** (length - 1) * (c + a * b)
    odd_one = a**length + (ONE + c) * _mixed_sum(length) + b**length
    if least == 1:
        return odd_one
    # odd least part > 1 may also carry color ac or bc; those colorings
    # contribute c times the bracket, so the total is (1+c) times it
    return (ONE + c) * odd_one


def chain_weight(ch: Chain) -> LaurentPoly:
    """Symbolic weight of a chain, a polynomial in a, b, c."""
    return _chain_weight(ch.least, ch.length)


def _string_weight_omega5(s: StringBlock) -> int:
    return fibonacci(s.eta + 2 if 1 in s else s.eta + 3)


def _string_weight_omega6(s: StringBlock) -> int:
    if 1 in s and (3 in s or 4 in s):
        return fibonacci(s.eta + 1)
    if 1 in s or 2 in s:
        return fibonacci(s.eta + 2)
    return fibonacci(s.eta + 3)


def _string_weight_omega7(s: StringBlock) -> int:
    if 2 in s and (4 in s or 5 in s):
        return fibonacci(s.eta + 1)
    if 2 in s or 3 in s:
        return fibonacci(s.eta + 2)
    return fibonacci(s.eta + 3)


_STRING_WEIGHTS = {
    WeightKind.OMEGA5: _string_weight_omega5,
    WeightKind.OMEGA6: _string_weight_omega6,
    WeightKind.OMEGA7: _string_weight_omega7,
}


def _check_domain(p: Partition, kind: WeightKind) -> None:
    dom = kind.domain
    if dom == "odd":
        if any(x % 2 == 0 for x in p):
            raise ValueError(f"{kind.value} is defined on partitions into odd parts, got {p}")
        return
    if not p.is_rogers_ramanujan():
        raise ValueError(f"{kind.value} is defined on Rogers-Ramanujan partitions, got {p}")
    if dom == "rr2" and 1 in p:
        raise ValueError(f"{kind.value} is defined on RR partitions without the part 1, got {p}")


def weight(p: Partition | Iterable[int], kind: WeightKind) -> LaurentPoly | int:
    """Weight of ``p``; a polynomial for OMEGA_SYMBOLIC and an integer otherwise."""
    p = as_partition(p)
    _check_domain(p, kind)

    if kind is WeightKind.OMEGA1:
        return 2 ** nu_d(p)
    if kind in _STRING_WEIGHTS:
        fn = _STRING_WEIGHTS[kind]
        out = 1
        for s in strings(p):
            out *= fn(s)
        return out

    chs = chains(p)
    if kind is WeightKind.OMEGA_SYMBOLIC:
        out_poly = ONE
        for ch in chs:
            out_poly = out_poly * chain_weight(ch)
        return out_poly
    if kind in (WeightKind.THEOREM_A, WeightKind.OMEGA3):
        return 2 ** sum(1 for ch in chs if not ch.is_even and ch.least > 1)
    if kind is WeightKind.OMEGA2:
        return 2 ** sum(1 for ch in chs if ch.is_even and ch.least > 2)
    if kind is WeightKind.OMEGA4:
        return 2 ** sum(1 for ch in chs if ch.is_even)
    if kind is WeightKind.THEOREM_B:
        out = 1
        for ch in chs:
            if ch.is_even:
                out *= 2
            elif ch.least == 1:
                out *= 2 * ch.length
            else:
                out *= 4 * ch.length
        return out
    raise ValueError(f"unknown weight kind {kind!r}")
