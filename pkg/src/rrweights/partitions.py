"""Partitions, Ferrers-graph statistics, chain/string views and enumeration."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, x in enumerate(parts):
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"parts must be positive integers, got {x!r}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def sigma(self) -> int:
        return sum(self.parts)

    @property
    def nu(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __contains__(self, x) -> bool:
        return x in self.parts

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def is_rogers_ramanujan(self) -> bool:
        ps = self.parts
        return all(ps[i] - ps[i + 1] >= 2 for i in range(len(ps) - 1))


def as_partition(p: Partition | Iterable[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def conjugate(p: Partition | Iterable[int]) -> Partition:
    """Column lengths of the Ferrers graph."""
    parts = as_partition(p).parts
    if not parts:
        return Partition()
    cols = []
    j = len(parts)
    for width in range(1, parts[0] + 1):
        while parts[j - 1] < width:
            j -= 1
        cols.append(j)
    return Partition(tuple(cols))


@dataclass(frozen=True)
class RankProfile:
    durfee: int
    hooks: tuple[int, ...]
    ranks: tuple[int, ...]


def durfee_size(parts: tuple[int, ...]) -> int:
    k = 0
    while k < len(parts) and parts[k] >= k + 1:
        k += 1
    return k


def rank_profile(p: Partition | Iterable[int]) -> RankProfile:
    """Durfee square side, diagonal hook lengths and successive ranks.

    For the i-th diagonal node the arm is ``parts[i] - i - 1`` and the leg is
    ``conj[i] - i - 1``; the hook is arm + leg + 1 and the rank is arm - leg.
    """
    parts = as_partition(p).parts
    k = durfee_size(parts)
    cols = conjugate(parts).parts
    hooks = tuple(parts[i] + cols[i] - 2 * i - 1 for i in range(k))
    ranks = tuple(parts[i] - cols[i] for i in range(k))
    return RankProfile(k, hooks, ranks)


def hook_partition(p: Partition | Iterable[int]) -> Partition:
    """The partition formed by the diagonal hook lengths."""
    return Partition(rank_profile(p).hooks)


@dataclass(frozen=True)
class Chain:
    """Parts ``least, least+2, ..., least+2(length-1)`` of an RR partition."""

    least: int
    length: int

    @property
    def parity(self) -> str:
        return "even" if self.least % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.least % 2 == 0

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self.least + 2 * j for j in range(self.length))


@dataclass(frozen=True)
class StringBlock:
    """Maximal run of an RR partition with consecutive gaps of at most 3."""

    parts: tuple[int, ...]
    eta: int = field(init=False)

    def __post_init__(self):
        ps = self.parts
        gaps = [ps[i + 1] - ps[i] for i in range(len(ps) - 1)]
        if not ps or any(g not in (2, 3) for g in gaps):
            raise ValueError(f"not a string block: {ps}")
        object.__setattr__(self, "eta", gaps.count(3))

    def __contains__(self, x) -> bool:
        return x in self.parts


def _require_rr(parts: tuple[int, ...]) -> None:
    for i in range(len(parts) - 1):
        if parts[i] - parts[i + 1] < 2:
            raise ValueError(f"not a Rogers-Ramanujan partition: {parts}")


def _split_runs(parts: tuple[int, ...], max_gap: int) -> list[tuple[int, ...]]:
    # parts are decreasing; runs come out decreasing, each run increasing
    runs: list[list[int]] = []
    for x in parts:
        if runs and runs[-1][-1] - x <= max_gap:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(reversed(r)) for r in runs]


def chains(p: Partition | Iterable[int]) -> list[Chain]:
    """Decompose an RR partition into chains, largest chain first."""
    parts = as_partition(p).parts
    _require_rr(parts)
    return [Chain(run[0], len(run)) for run in _split_runs(parts, 2)]


def strings(p: Partition | Iterable[int]) -> list[StringBlock]:
    """Decompose an RR partition into strings, largest string first."""
    parts = as_partition(p).parts
    _require_rr(parts)
    return [StringBlock(run) for run in _split_runs(parts, 3)]


class FilterKind(enum.Enum):
    ALL = "all"
    DISTINCT = "distinct"
    ODD_PARTS = "odd"
    RR = "rr"
    RR2 = "rr2"
    PARTS_ALLOWED = "parts_allowed"
    RANKS_IN = "ranks_in"


@dataclass(frozen=True)
class PartitionFilter:
    kind: FilterKind
    modulus: int = 0
    residues: frozenset[int] = frozenset()
    lo: int = 0
    hi: int = 0

    def accepts(self, p: Partition | Iterable[int]) -> bool:
        """Membership test, independent of the pruned enumeration."""
        parts = as_partition(p).parts
        kind = self.kind
        if kind is FilterKind.ALL:
            return True
        if kind is FilterKind.DISTINCT:
            return len(set(parts)) == len(parts)
        if kind is FilterKind.ODD_PARTS:
            return all(x % 2 for x in parts)
        if kind is FilterKind.RR:
            return as_partition(parts).is_rogers_ramanujan()
        if kind is FilterKind.RR2:
            return as_partition(parts).is_rogers_ramanujan() and 1 not in parts
        if kind is FilterKind.PARTS_ALLOWED:
            return all(x % self.modulus in self.residues for x in parts)
        if kind is FilterKind.RANKS_IN:
            return all(self.lo <= r <= self.hi for r in rank_profile(parts).ranks)
        raise AssertionError(kind)


ALL = PartitionFilter(FilterKind.ALL)
DISTINCT = PartitionFilter(FilterKind.DISTINCT)
ODD_PARTS = PartitionFilter(FilterKind.ODD_PARTS)
RR = PartitionFilter(FilterKind.RR)
RR2 = PartitionFilter(FilterKind.RR2)


def parts_allowed(residues: Iterable[int], modulus: int) -> PartitionFilter:
    """Partitions whose parts all lie in the given residue classes."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    return PartitionFilter(
        FilterKind.PARTS_ALLOWED, modulus=modulus, residues=frozenset(r % modulus for r in residues)
    )


def ranks_in(lo: int, hi: int) -> PartitionFilter:
    """Partitions whose successive ranks all lie in ``[lo, hi]``."""
    return PartitionFilter(FilterKind.RANKS_IN, lo=lo, hi=hi)


def _descend(n: int, largest: int, gap: int, smallest: int, ok) -> Iterator[tuple[int, ...]]:
    # parts in (smallest..largest], each next part <= previous - gap
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), smallest - 1, -1):
        if not ok(first):
            continue
        rest = n - first
        if rest and gap and first - gap < smallest:
            continue
        for tail in _descend(rest, first - gap, gap, smallest, ok):
            yield (first,) + tail


def _all_parts(_x: int) -> bool:
    return True


def _odd(x: int) -> bool:
    return x % 2 == 1


def enumerate_partitions(n: int, filt: PartitionFilter = ALL) -> Iterator[Partition]:
    """Every partition of ``n`` in ``filt``, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    kind = filt.kind
    gap, smallest, ok = 0, 1, _all_parts
    if kind is FilterKind.DISTINCT:
        gap = 1
    elif kind is FilterKind.ODD_PARTS:
        ok = _odd
    elif kind is FilterKind.RR:
        gap = 2
    elif kind is FilterKind.RR2:
        gap, smallest = 2, 2
    elif kind is FilterKind.PARTS_ALLOWED:
        modulus, residues = filt.modulus, filt.residues

        def ok(x: int) -> bool:
            return x % modulus in residues

    for parts in _descend(n, n, gap, smallest, ok):
        if kind is FilterKind.RANKS_IN:
            # the empty partition has no ranks and passes vacuously
            if not all(filt.lo <= r <= filt.hi for r in successive_ranks(parts)):
                continue
        yield Partition(parts)


def successive_ranks(parts: tuple[int, ...]) -> list[int]:
    """Successive ranks of a raw weakly decreasing tuple."""
    out = []
    col = len(parts)
    for i, x in enumerate(parts):
        if x < i + 1:
            break
        while parts[col - 1] < i + 1:
            col -= 1
        out.append(x - col)
    return out


def count(n: int, filt: PartitionFilter = ALL) -> int:
    return sum(1 for _ in enumerate_partitions(n, filt))


def nu_d(p: Partition | Iterable[int]) -> int:
    """Number of different part sizes."""
    return len(set(as_partition(p).parts))


def nu_3(p: Partition | Iterable[int]) -> int:
    """Number of parts divisible by 3, counted with multiplicity."""
    return sum(1 for x in as_partition(p).parts if x % 3 == 0)
