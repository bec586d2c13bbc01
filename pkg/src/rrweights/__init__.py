"""Exact verification of weighted Rogers-Ramanujan partition identities."""

from .harness import Case, Report, TheoremId, verify
from .partitions import (
    Chain,
    Partition,
    PartitionFilter,
    StringBlock,
    chains,
    conjugate,
    count,
    enumerate_partitions,
    rank_profile,
    strings,
)
from .polyq import LaurentPoly, QSeries
from .weights import WeightKind, weight

__all__ = [
    "Case",
    "Chain",
    "LaurentPoly",
    "Partition",
    "PartitionFilter",
    "QSeries",
    "Report",
    "StringBlock",
    "TheoremId",
    "WeightKind",
    "chains",
    "conjugate",
    "count",
    "enumerate_partitions",
    "rank_profile",
    "strings",
    "verify",
    "weight",
]
