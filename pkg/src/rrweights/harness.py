"""Uniform verification of every identity up to a bound, as a :class:`Report`."""

from __future__ import annotations

import enum
import json
from collections.abc import Callable
from dataclasses import dataclass, field

from . import colored, identities as ids
from .partitions import RR, Partition, enumerate_partitions
from .polyq import QSeries
from .weights import WeightKind, weight


class TheoremId(enum.Enum):
    T1 = "T1"
    JTP = "JTP"
    FINITE_JTP = "FINITE_JTP"
    SYLVESTER = "SYLVESTER"
    THM_A = "THM_A"
    THM_B = "THM_B"
    KEY_IDENTITY = "KEY_IDENTITY"
    GOELLNITZ = "GOELLNITZ"
    THM_C = "THM_C"
    EQ_5_10 = "EQ_5_10"
    THM_R = "THM_R"
    THM_R_PRIME = "THM_R_PRIME"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    LEBESGUE = "LEBESGUE"
    FINITE_LEBESGUE = "FINITE_LEBESGUE"
    SURJECTION = "SURJECTION"

    @classmethod
    def parse(cls, name: str) -> TheoremId:
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown theorem id {name!r}") from None


DEFAULT_BOUNDS = {
    TheoremId.T1: 30,
    TheoremId.JTP: 100,
    TheoremId.FINITE_JTP: 5,
    TheoremId.SYLVESTER: 40,
    TheoremId.THM_A: 40,
    TheoremId.THM_B: 40,
    TheoremId.KEY_IDENTITY: 25,
    TheoremId.GOELLNITZ: 40,
    TheoremId.THM_C: 25,
    TheoremId.EQ_5_10: 25,
    TheoremId.THM_R: 40,
    TheoremId.THM_R_PRIME: 40,
    TheoremId.T2: 40,
    TheoremId.T3: 40,
    TheoremId.T4: 40,
    TheoremId.T5: 40,
    TheoremId.T6: 40,
    TheoremId.T7: 40,
    TheoremId.LEBESGUE: 30,
    TheoremId.FINITE_LEBESGUE: 5,
    TheoremId.SURJECTION: 25,
}

# color classes with at most this many symbols are checked against the closed form
EQ_5_10_MAX_S = 4


@dataclass(frozen=True)
class Case:
    index: int
    lhs: str
    rhs: str
    match: bool


@dataclass
class Report:
    theorem: TheoremId
    bound: int
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.match for case in self.cases)

    def first_failure(self) -> Case | None:
        return next((case for case in self.cases if not case.match), None)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "bound": self.bound,
            "cases": [
                {"index": x.index, "lhs": x.lhs, "rhs": x.rhs, "match": x.match} for x in self.cases
            ],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.theorem.value} bound={self.bound}"]
        for x in self.cases:
            flag = "ok" if x.match else "MISMATCH"
            lines.append(f"  [{x.index}] {x.lhs} | {x.rhs}  {flag}")
        good = sum(x.match for x in self.cases)
        verdict = "PASSED" if self.passed else "FAILED"
        lines.append(f"{verdict} ({good}/{len(self.cases)} cases)")
        return "\n".join(lines)

    def to_tsv(self) -> str:
        rows = ["index\tlhs\trhs\tmatch"]
        rows += [f"{x.index}\t{x.lhs}\t{x.rhs}\t{str(x.match).lower()}" for x in self.cases]
        return "\n".join(rows)


def _series_cases(lhs: QSeries, rhs: QSeries) -> list[Case]:
    return [Case(k, str(x), str(y), x == y) for k, (x, y) in enumerate(zip(lhs, rhs))]


def _check_t1(bound: int) -> list[Case]:
    product = ids.vector_product(bound)
    cases = []
    for n in range(bound + 1):
        lhs, rhs = ids.theorem1_sides(n, product)
        enumerated = ids.vector_partition_sum(n)
        rhs_text = str(rhs) if enumerated == rhs else f"{rhs} [enumerated: {enumerated}]"
        cases.append(Case(n, str(lhs), rhs_text, lhs == rhs == enumerated))
    return cases


def _check_jtp(bound: int) -> list[Case]:
    return _series_cases(*ids.jtp_sides(bound))


def _check_finite(sides: Callable[[int, int], tuple[QSeries, QSeries]], degree: Callable[[int], int]) -> Callable[[int], list[Case]]:
    def check(bound: int) -> list[Case]:
        cases = []
        for L in range(bound + 1):
            order = max(2 * (L + 1) ** 2, degree(L))
            lhs, rhs = sides(L, order)
            cases.append(Case(L, str(lhs), str(rhs), lhs == rhs))
        return cases

    return check


def _fmt_counts(d: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(d.items())) + "}"


def _check_sylvester(bound: int) -> list[Case]:
    cases = []
    for n in range(bound + 1):
        counts = ids.sylvester_counts(n)
        odd = {k: v[0] for k, v in counts.items()}
        dist = {k: v[1] for k, v in counts.items()}
        wl, wr = ids.sylvester_weighted(n)
        cases.append(
            Case(n, f"{_fmt_counts(odd)}; {wl}", f"{_fmt_counts(dist)}; {wr}", odd == dist and wl == wr)
        )
    return cases


def _check_pairs(fn: Callable[[int], tuple[int, int]]) -> Callable[[int], list[Case]]:
    def check(bound: int) -> list[Case]:
        out = []
        for n in range(bound + 1):
            lhs, rhs = fn(n)
            out.append(Case(n, str(lhs), str(rhs), lhs == rhs))
        return out

    return check


def _check_key(bound: int) -> list[Case]:
    return _series_cases(*ids.key_identity_sides(bound))


def _check_goellnitz(bound: int) -> list[Case]:
    product = ids.goellnitz_product_ints(bound)
    cases = []
    for n in range(bound + 1):
        big_b, big_c = colored.goellnitz_counts(n)
        direct = colored.goellnitz_difference_count(n)
        rhs = str(big_c) if direct == big_c else f"{big_c} [difference conditions: {direct}]"
        cases.append(Case(n, str(big_b), rhs, big_b == big_c == direct == product[n]))
    return cases


def _check_thm_c(bound: int) -> list[Case]:
    cases = []
    for n in range(bound + 1):
        vec = colored.vector_counts(n)
        agg = colored.aggregate_to_vector(colored.refined_counts(n, colored.Transform.PLAIN))
        cases.append(Case(n, _fmt_counts(vec), _fmt_counts(agg), vec == agg))
    return cases


def _check_eq_5_10(bound: int) -> list[Case]:
    cases = []
    for idx, (counts, (brute, closed)) in enumerate(sorted(ids.eq_5_10_sides(bound, EQ_5_10_MAX_S).items())):
        label = "".join(map(str, counts))
        cases.append(Case(idx, f"{label}: {brute}", f"{label}: {closed}", brute == closed))
    return cases


R_PAIRS = [(6, 1), (6, 2), (7, 1), (7, 2), (7, 3)]
R_PRIME_PAIRS = [(4, 2), (6, 3), (8, 4)]


def _check_rank_theorem(pairs: list[tuple[int, int]], by_count: bool) -> Callable[[int], list[Case]]:
    def check(bound: int) -> list[Case]:
        gfs = {p: ids.modular_gf_ints(*p, bound) for p in pairs}
        cases = []
        for n in range(bound + 1):
            q = ids.rank_counts_all(n, pairs)
            lhs, rhs, ok = [], [], True
            for k, i in pairs:
                av = gfs[(k, i)][n]
                if by_count:
                    direct = ids.modular_count(n, k, i)
                    ok &= direct == av
                ok &= q[(k, i)] == av
                lhs.append(f"Q_{k}_{i}={q[(k, i)]}")
                rhs.append(f"A_{k}_{i}={av}")
            cases.append(Case(n, " ".join(lhs), " ".join(rhs), ok))
        return cases

    return check


THEOREM_PAIRS = {
    TheoremId.T2: (6, 1),
    TheoremId.T3: (6, 2),
    TheoremId.T4: (6, 3),
    TheoremId.T5: (7, 3),
    TheoremId.T6: (7, 2),
    TheoremId.T7: (7, 1),
}


def _check_weighted(tid: TheoremId) -> Callable[[int], list[Case]]:
    k, i = THEOREM_PAIRS[tid]
    kind = ids.RANK_WEIGHTS[(k, i)]

    def check(bound: int) -> list[Case]:
        gf = ids.modular_gf_ints(k, i, bound)
        extra = ids.signed_product_ints(bound) if tid is TheoremId.T4 else None
        cases = []
        for n in range(bound + 1):
            if tid is TheoremId.T4:
                # the A-side is the signed count over unrestricted partitions
                av = ids.signed_unrestricted(n)
                ok = av == gf[n] == extra[n]
            else:
                av = ids.modular_count(n, k, i)
                ok = av == gf[n]
            q = ids.rank_count(n, k, i)
            w = ids.weighted_rr_sum(n, kind)
            rhs = str(w) if q == w else f"{w} [Q={q}]"
            cases.append(Case(n, str(av), rhs, ok and q == w and av == w))
        return cases

    return check


def _safe_weight(p: Partition, kind: WeightKind) -> int:
    try:
        return weight(p, kind)
    except ValueError:
        # outside the weight's domain (part 1 for the R_2 kinds): no preimages
        return 0


def _check_surjection(bound: int) -> list[Case]:
    pairs = list(ids.RANK_WEIGHTS)
    cases = []
    for n in range(bound + 1):
        targets = list(enumerate_partitions(n, RR))
        lhs, rhs, ok = [], [], True
        for k, i in pairs:
            kind = ids.RANK_WEIGHTS[(k, i)]
            brute = ids.preimages_by_enumeration(n, k, i)
            tot_pre = tot_w = 0
            for t in targets:
                built = ids.preimage_count(t, k, i)
                w = _safe_weight(t, kind)
                ok &= built == brute.get(t.parts, 0) == w
                tot_pre += built
                tot_w += w
            # every enumerated partition must land on an RR target
            ok &= sum(brute.values()) == tot_pre
            lhs.append(f"{k},{i}:{tot_pre}")
            rhs.append(f"{k},{i}:{tot_w}")
        cases.append(Case(n, " ".join(lhs), " ".join(rhs), ok))
    return cases


def _check_lebesgue(bound: int) -> list[Case]:
    return _series_cases(*ids.lebesgue_sides(bound))


CHECKS: dict[TheoremId, Callable[[int], list[Case]]] = {
    TheoremId.T1: _check_t1,
    TheoremId.JTP: _check_jtp,
    TheoremId.FINITE_JTP: _check_finite(ids.finite_jtp_sides, ids.finite_jtp_degree),
    TheoremId.SYLVESTER: _check_sylvester,
    TheoremId.THM_A: _check_pairs(ids.thmA_sides),
    TheoremId.THM_B: _check_pairs(ids.thmB_sides),
    TheoremId.KEY_IDENTITY: _check_key,
    TheoremId.GOELLNITZ: _check_goellnitz,
    TheoremId.THM_C: _check_thm_c,
    TheoremId.EQ_5_10: _check_eq_5_10,
    TheoremId.THM_R: _check_rank_theorem(R_PAIRS, by_count=True),
    TheoremId.THM_R_PRIME: _check_rank_theorem(R_PRIME_PAIRS, by_count=False),
    TheoremId.LEBESGUE: _check_lebesgue,
    TheoremId.FINITE_LEBESGUE: _check_finite(ids.finite_lebesgue_sides, ids.finite_lebesgue_degree),
    TheoremId.SURJECTION: _check_surjection,
}
for _tid in THEOREM_PAIRS:
    CHECKS[_tid] = _check_weighted(_tid)


def verify(theorem: TheoremId | str, bound: int | None = None) -> Report:
    """Check ``theorem`` for every case up to ``bound`` (its default if omitted)."""
    tid = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
    if bound is None:
        bound = DEFAULT_BOUNDS[tid]
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return Report(tid, bound, CHECKS[tid](bound))
