"""Evaluators for both sides of each weighted partition identity.

Each ``*_sides`` function returns the two quantities that the identity
asserts are equal. Nothing here decides pass or fail; see
:mod:`rrweights.harness` for that.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Iterator

from . import colored
from .partitions import (
    ALL,
    DISTINCT,
    ODD_PARTS,
    RR,
    RR2,
    Partition,
    as_partition,
    chains,
    count,
    enumerate_partitions,
    nu_3,
    nu_d,
    parts_allowed,
    rank_profile,
    ranks_in,
    successive_ranks,
)
from .polyq import (
    ONE,
    ZERO,
    A,
    LaurentPoly,
    QSeries,
    a,
    b,
    c,
    gaussian_binomial_ints,
    int_pochhammer,
    int_series_inverse,
    int_series_mul,
    pochhammer_finite,
    pochhammer_infinite,
    series_inverse,
    series_mul,
    triangular,
)
from .weights import WeightKind, weight

# (k, i) -> weight kind of the matching theorem
RANK_WEIGHTS = {
    (6, 1): WeightKind.OMEGA2,
    (6, 2): WeightKind.OMEGA3,
    (6, 3): WeightKind.OMEGA4,
    (7, 3): WeightKind.OMEGA5,
    (7, 2): WeightKind.OMEGA6,
    (7, 1): WeightKind.OMEGA7,
}


def rank_interval(k: int, i: int) -> tuple[int, int]:
    """Successive-rank window ``[-i+2, k-i-2]``."""
    if not 1 <= i <= k / 2:
        raise ValueError(f"need 1 <= i <= k/2, got k={k}, i={i}")
    return -i + 2, k - i - 2


# ---------------------------------------------------------------- Theorem 1

def vector_product(order: int) -> QSeries:
    """``(-aq;q^2)_inf (-bq;q^2)_inf (-cq^2;q^2)_inf``."""
    return series_mul(
        series_mul(pochhammer_infinite(-a, 1, 2, order), pochhammer_infinite(-b, 1, 2, order)),
        pochhammer_infinite(-c, 2, 2, order),
    )


def _distinct_by_size(n: int, parity: int) -> list[list[int]]:
    # sizes of distinct-part partitions with all parts of one parity, by total
    out = []
    for m in range(n + 1):
        out.append(
            [len(p) for p in enumerate_partitions(m, DISTINCT) if all(x % 2 == parity for x in p)]
        )
    return out


def vector_partition_sum(n: int) -> LaurentPoly:
    """Direct enumeration of vector partitions (distinct odd, distinct odd, distinct even)."""
    odd = _distinct_by_size(n, 1)
    even = _distinct_by_size(n, 0)
    terms: Counter = Counter()
    for n1 in range(n + 1):
        for n2 in range(n + 1 - n1):
            n3 = n - n1 - n2
            for l1 in odd[n1]:
                for l2 in odd[n2]:
                    for l3 in even[n3]:
                        terms[(l1, l2, l3, 0)] += 1
    return LaurentPoly(terms)


def rr_weight_sum(n: int, kind: WeightKind) -> LaurentPoly | int:
    """Sum of ``weight(., kind)`` over the domain of ``kind`` at size ``n``."""
    dom = kind.domain
    filt = ODD_PARTS if dom == "odd" else RR2 if dom == "rr2" else RR
    total: LaurentPoly | int = ZERO if kind is WeightKind.OMEGA_SYMBOLIC else 0
    for p in enumerate_partitions(n, filt):
        total = total + weight(p, kind)
    return total


def theorem1_sides(n: int, product: QSeries | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """(sum of chain weights over RR partitions of n, coefficient of q^n in the product)."""
    if product is None or product.order < n:
        product = vector_product(n)
    return rr_weight_sum(n, WeightKind.OMEGA_SYMBOLIC), product[n]


# ---------------------------------------------------- Jacobi triple product

def theta_series(order: int, symbol: LaurentPoly = a) -> QSeries:
    """``sum_n x^n q^(n^2)`` for ``x = symbol``."""
    cs = [ZERO] * (order + 1)
    cs[0] = ONE
    n = 1
    while n * n <= order:
        cs[n * n] = symbol**n + symbol ** (-n)
        n += 1
    return QSeries(cs)


def jtp_sides(order: int) -> tuple[QSeries, QSeries]:
    """Theta series and the triple product with ``b = 1/a``, ``c = -1``."""
    rhs = series_mul(
        series_mul(pochhammer_infinite(-a, 1, 2, order), pochhammer_infinite(-(a**-1), 1, 2, order)),
        pochhammer_infinite(1, 2, 2, order),
    )
    return theta_series(order), rhs


# ------------------------------------------------------------------ Sylvester

def consecutive_blocks(parts: Iterable[int]) -> int:
    """Number of maximal runs of consecutive integers in a distinct-part partition."""
    ps = list(parts)
    if not ps:
        return 0
    return 1 + sum(1 for x, y in zip(ps, ps[1:]) if x - y > 1)


def sylvester_counts(n: int) -> dict[int, tuple[int, int]]:
    """k -> (odd-part partitions with k different parts, distinct partitions with k blocks)."""
    odd = Counter(nu_d(p) for p in enumerate_partitions(n, ODD_PARTS))
    dist = Counter(consecutive_blocks(p) for p in enumerate_partitions(n, DISTINCT))
    return {k: (odd[k], dist[k]) for k in sorted(set(odd) | set(dist))}


def sylvester_weighted(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Dilated weighted form, as polynomials in ``x = ab``.

    Left: partitions into parts = 2 (mod 4) weighted ``(1+x)^(number of
    different parts)``. Right: RR partitions into even parts weighted
    ``(1+x)^(number of chains)``.
    """
    one_x = ONE + a * b
    lhs = ZERO
    for p in enumerate_partitions(n, parts_allowed([2], 4)):
        lhs = lhs + one_x ** nu_d(p)
    rhs = ZERO
    for p in enumerate_partitions(n, RR):
        if all(x % 2 == 0 for x in p):
            rhs = rhs + one_x ** len(chains(p))
    return lhs, rhs


# ----------------------------------------------------------- Theorems A, B

def thmA_sides(n: int) -> tuple[int, int]:
    return rr_weight_sum(n, WeightKind.THEOREM_A), count(n, DISTINCT)


def thmB_sides(n: int) -> tuple[int, int]:
    return (
        rr_weight_sum(n, WeightKind.THEOREM_B),
        sum(2 ** nu_d(p) for p in enumerate_partitions(n, ODD_PARTS)),
    )


# -------------------------------------------------------------- key identity

def _inverse_poch_table(max_m: int, order: int) -> list[list[int]]:
    # 1/(q)_m for m = 0..max_m
    return [int_series_inverse(int_pochhammer(1, 1, 1, m, order), order) for m in range(max_m + 1)]


def class_exponent(counts: tuple[int, ...]) -> int:
    """Lowest q-power ``T_s + T_delta + T_epsilon + T_(phi-1)`` of a color class."""
    al, be, ga, de, ep, ph = counts
    s = al + be + ga + de + ep + ph
    return triangular(s) + triangular(de) + triangular(ep) + triangular(ph - 1)


def class_generating_function(counts: tuple[int, ...], order: int, _inv=None) -> list[int]:
    """Closed-form generating function of one color class, truncated at ``order``.

    ``q^(T_s+T_delta+T_epsilon+T_(phi-1)) (1 - q^alpha (1 - q^phi))`` divided
    by ``(q)_alpha ... (q)_phi``.
    """
    al, _be, _ga, _de, _ep, ph = counts
    low = class_exponent(counts)
    out = [0] * (order + 1)
    if low > order:
        return out
    inv = _inv if _inv is not None else _inverse_poch_table(max(counts), order)
    series = [1] + [0] * order
    for m in counts:
        if m:
            series = int_series_mul(series, inv[m], order)
    numerator = [0] * (order + 1)
    for power, coef in ((0, 1), (al, -1), (al + ph, 1)):
        if power <= order:
            numerator[power] += coef
    series = int_series_mul(series, numerator, order)
    for k in range(order + 1 - low):
        out[k + low] = series[k]
    return out


def _classes_within(order: int, max_s: int | None = None) -> Iterator[tuple[int, ...]]:
    s = 0
    while triangular(s) <= order and (max_s is None or s <= max_s):
        for counts in _compositions(s, 6):
            if class_exponent(counts) <= order:
                yield counts
        s += 1


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for cut in cuts:
            out.append(cut - prev - 1)
            prev = cut
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def key_identity_sides(order: int) -> tuple[QSeries, QSeries]:
    """Both sides of the key identity with symbolic a, b, c."""
    inv = _inverse_poch_table(order, order)
    acc: list[Counter] = [Counter() for _ in range(order + 1)]
    for counts in _classes_within(order):
        al, be, ga, de, ep, ph = counts
        mono = (al + de + ep, be + de + ph, ga + ep + ph, 0)
        for k, v in enumerate(class_generating_function(counts, order, inv)):
            if v:
                acc[k][mono] += v
    lhs = QSeries([LaurentPoly(t) for t in acc])
    rhs = series_mul(
        series_mul(pochhammer_infinite(-a, 1, 1, order), pochhammer_infinite(-b, 1, 1, order)),
        pochhammer_infinite(-c, 1, 1, order),
    )
    return lhs, rhs


def eq_5_10_sides(max_n: int, max_s: int) -> dict[tuple[int, ...], tuple[list[int], list[int]]]:
    """Per color class with at most ``max_s`` symbols: (brute counts, closed form)."""
    brute = colored.class_series_counts(max_n, max_s, colored.Transform.PLAIN)
    inv = _inverse_poch_table(max(max_s, 1), max_n)
    out = {}
    for s in range(max_s + 1):
        for counts in _compositions(s, 6):
            out[counts] = (
                brute.get(counts, [0] * (max_n + 1)),
                class_generating_function(counts, max_n, inv),
            )
    return out


# ------------------------------------------------------ Theorems R and R'

def excluded_residues(k: int, i: int) -> frozenset[int]:
    return frozenset({0, i % k, (k - i) % k})


def modular_count(n: int, k: int, i: int) -> int:
    """Partitions of ``n`` into parts not congruent to 0, i or -i mod k."""
    rank_interval(k, i)
    if 2 * i == k:
        raise ValueError("no standard partition interpretation")
    allowed = [r for r in range(k) if r not in excluded_residues(k, i)]
    return count(n, parts_allowed(allowed, k))


def modular_gf(k: int, i: int, order: int) -> QSeries:
    """``(q^k;q^k)_inf (q^i;q^k)_inf (q^(k-i);q^k)_inf / (q)_inf``."""
    rank_interval(k, i)
    return QSeries(modular_gf_ints(k, i, order))


def modular_gf_ints(k: int, i: int, order: int) -> list[int]:
    num = int_pochhammer(1, k, k, None, order)
    num = int_series_mul(num, int_pochhammer(1, i, k, None, order), order)
    num = int_series_mul(num, int_pochhammer(1, k - i, k, None, order), order)
    return int_series_mul(num, int_series_inverse(int_pochhammer(1, 1, 1, None, order), order), order)


def rank_count(n: int, k: int, i: int) -> int:
    """Partitions of ``n`` whose successive ranks lie in ``[-i+2, k-i-2]``."""
    lo, hi = rank_interval(k, i)
    return count(n, ranks_in(lo, hi))


def rank_counts_all(n: int, pairs: Iterable[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """``rank_count`` for several pairs from one pass over the partitions of ``n``."""
    windows = {pair: rank_interval(*pair) for pair in pairs}
    out = dict.fromkeys(windows, 0)
    for p in enumerate_partitions(n, ALL):
        ranks = successive_ranks(p.parts)
        lo_r = min(ranks, default=0)
        hi_r = max(ranks, default=0)
        for pair, (lo, hi) in windows.items():
            if not ranks or (lo <= lo_r and hi_r <= hi):
                out[pair] += 1
    return out


# -------------------------------------------------------- Theorems 2 to 7

def weighted_rr_sum(n: int, kind: WeightKind) -> int:
    if kind not in RANK_WEIGHTS.values():
        raise ValueError(f"{kind.value} is not one of the rank-window weights")
    return rr_weight_sum(n, kind)


def signed_unrestricted(n: int) -> int:
    """Partitions of ``n`` counted with sign ``(-1)^(number of multiples of 3)``."""
    return sum(-1 if nu_3(p) % 2 else 1 for p in enumerate_partitions(n, ALL))


def signed_product_ints(order: int) -> list[int]:
    """``1 / ((q;q^3)_inf (q^2;q^3)_inf (-q^3;q^3)_inf)``."""
    den = int_pochhammer(1, 1, 3, None, order)
    den = int_series_mul(den, int_pochhammer(1, 2, 3, None, order), order)
    den = int_series_mul(den, int_pochhammer(-1, 3, 3, None, order), order)
    return int_series_inverse(den, order)


def from_frobenius(arms: Iterable[int], legs: Iterable[int]) -> Partition:
    """Partition with Frobenius coordinates (arms | legs), both strictly decreasing."""
    arms, legs = list(arms), list(legs)
    k = len(arms)
    if len(legs) != k:
        raise ValueError("arms and legs must have equal length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
            raise ValueError("Frobenius coordinates must be strictly decreasing and >= 0")
    rows = [arms[i] + i + 1 for i in range(k)]
    # rows below the Durfee square, read off the columns given by the legs
    cols = [legs[j] + j + 1 for j in range(k)]
    r = k + 1
    while True:
        width = sum(1 for col in cols if col >= r)
        if not width:
            break
        rows.append(width)
        r += 1
    return Partition(tuple(rows))


def _hook_choices(target: tuple[int, ...], lo: int, hi: int) -> Iterator[tuple[list[int], list[int]]]:
    arms: list[int] = []
    legs: list[int] = []

    def rec(idx: int):
        if idx == len(target):
            yield list(arms), list(legs)
            return
        h = target[idx]
        for r in range(lo, hi + 1):
            if (h - 1 - r) % 2 or abs(r) > h - 1:
                continue
            arm, leg = (h - 1 + r) // 2, (h - 1 - r) // 2
            if arms and (arm >= arms[-1] or leg >= legs[-1]):
                continue
            arms.append(arm)
            legs.append(leg)
            yield from rec(idx + 1)
            arms.pop()
            legs.pop()

    yield from rec(0)


def preimages(target: Partition | Iterable[int], k: int, i: int) -> list[Partition]:
    """Partitions with ranks in the (k, i) window whose hook lengths form ``target``.

    Built directly from Frobenius coordinates: a hook of length h and rank r
    has arm (h-1+r)/2 and leg (h-1-r)/2.
    """
    t = as_partition(target)
    if not t.is_rogers_ramanujan():
        raise ValueError(f"target must be a Rogers-Ramanujan partition, got {t}")
    lo, hi = rank_interval(k, i)
    return [from_frobenius(arms, legs) for arms, legs in _hook_choices(t.parts, lo, hi)]


def preimage_count(target: Partition | Iterable[int], k: int, i: int) -> int:
    return len(preimages(target, k, i))


def preimages_by_enumeration(n: int, k: int, i: int) -> dict[tuple[int, ...], int]:
    """Brute-force hook-partition histogram of the (k, i) rank-window partitions of ``n``."""
    lo, hi = rank_interval(k, i)
    out: Counter = Counter()
    for p in enumerate_partitions(n, ranks_in(lo, hi)):
        out[rank_profile(p).hooks] += 1
    return dict(out)


# ------------------------------------------------------- finite identities

def _qbin2(n: int, m: int, order: int) -> list[int]:
    return gaussian_binomial_ints(n, m, 2, order)


def _accumulate(acc: dict[int, list[int]], a_exp: int, sign: int, shift: int, factors: list[list[int]], order: int) -> None:
    if shift > order:
        return
    series = [1] + [0] * order
    for f in factors:
        series = int_series_mul(series, f, order)
    row = acc.setdefault(a_exp, [0] * (order + 1))
    for k in range(order + 1 - shift):
        if series[k]:
            row[k + shift] += sign * series[k]


def _to_series(acc: dict[int, list[int]], order: int) -> QSeries:
    cs = []
    for k in range(order + 1):
        terms = {(0, 0, 0, e): row[k] for e, row in acc.items() if row[k]}
        cs.append(LaurentPoly(terms))
    return QSeries(cs)


def _triple_sum(M: int, order: int, sign_of, a_exp_of, shift_of) -> dict[int, list[int]]:
    # sum over i, j, k of a signed A-monomial times q^shift times
    # [M-k, i][M-i, j][M-j, k] in base q^2
    acc: dict[int, list[int]] = {}
    for i in range(M + 1):
        for j in range(M + 1 - i):
            for k in range(M + 1 - j):
                if i > M - k:
                    continue
                factors = [_qbin2(M - k, i, order), _qbin2(M - i, j, order), _qbin2(M - j, k, order)]
                _accumulate(acc, a_exp_of(i, j, k), sign_of(i, j, k), shift_of(i, j, k), factors, order)
    return acc


def _triple_degree(M: int, shift_of) -> int:
    deg = 0
    for i in range(M + 1):
        for j in range(M + 1 - i):
            for k in range(M + 1 - j):
                if i > M - k:
                    continue
                d = shift_of(i, j, k) + 2 * (i * (M - k - i) + j * (M - i - j) + k * (M - j - k))
                deg = max(deg, d)
    return deg


def _jtp_shift(i: int, j: int, k: int) -> int:
    return 2 * triangular(i) + 2 * triangular(j) + 2 * triangular(k) - i - j


def finite_jtp_degree(L: int) -> int:
    return max(L * (L + 1), _triple_degree(L, _jtp_shift))


def finite_jtp_sides(L: int, order: int | None = None) -> tuple[QSeries, QSeries]:
    """Finite triple product identity at level ``L``; default order is the full degree."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    if order is None:
        order = finite_jtp_degree(L)
    lhs_acc: dict[int, list[int]] = {}
    for ell in range(L + 1):
        sign = -1 if (L + ell) % 2 else 1
        base = 2 * (triangular(L) - triangular(ell))
        for n in range(-ell, ell + 1):
            power = base + n * n
            if power <= order:
                lhs_acc.setdefault(n, [0] * (order + 1))[power] += sign
    rhs_acc = _triple_sum(
        L,
        order,
        sign_of=lambda i, j, k: -1 if k % 2 else 1,
        a_exp_of=lambda i, j, k: i - j,
        shift_of=_jtp_shift,
    )
    return _to_series(lhs_acc, order), _to_series(rhs_acc, order)


def _leb_shift(i: int, j: int, k: int) -> int:
    return 2 * (triangular(i) + triangular(j) + triangular(k)) - i - j


def _lebesgue_triple(M: int, order: int) -> dict[int, list[int]]:
    return _triple_sum(
        M,
        order,
        sign_of=lambda i, j, k: -1 if j % 2 else 1,
        a_exp_of=lambda i, j, k: i + j,
        shift_of=_leb_shift,
    )


def finite_lebesgue_degree(L: int) -> int:
    lhs_deg = 0
    for s in range(L + 1):
        for r in range(L - s + 1):
            if s > r + 1:
                continue
            d = 2 * (triangular(r) + triangular(s)) + 2 * (r * (L - s - r) + s * (r + 1 - s))
            lhs_deg = max(lhs_deg, d)
    return max(lhs_deg, _triple_degree(L + 1, _leb_shift), 2 * (L + 1) + _triple_degree(L, _leb_shift))


def finite_lebesgue_sides(L: int, order: int | None = None) -> tuple[QSeries, QSeries]:
    """Finite Lebesgue identity at level ``L``; default order is the full degree."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    if order is None:
        order = finite_lebesgue_degree(L)
    lhs_acc: dict[int, list[int]] = {}
    for s in range(L + 1):
        for r in range(L - s + 1):
            if s > r + 1:
                continue
            _accumulate(
                lhs_acc,
                2 * s,
                -1 if s % 2 else 1,
                2 * (triangular(r) + triangular(s)),
                [_qbin2(L - s, r, order), _qbin2(r + 1, s, order)],
                order,
            )
    first = _lebesgue_triple(L + 1, order)
    second = _lebesgue_triple(L, order)
    rhs_acc: dict[int, list[int]] = {e: list(row) for e, row in first.items()}
    shift = 2 * (L + 1)
    for e, row in second.items():
        target = rhs_acc.setdefault(e, [0] * (order + 1))
        for k in range(order + 1 - shift):
            target[k + shift] -= row[k]
    return _to_series(lhs_acc, order), _to_series(rhs_acc, order)


def lebesgue_sides(order: int) -> tuple[QSeries, QSeries]:
    """Lebesgue's identity dilated by 2.

    Left: ``(1 - A^2 q^2) sum_r q^(2 T_r) (A^2 q^4; q^2)_r / (q^2; q^2)_r``.
    Right: ``(-q^2; q^2)_inf (A^2 q^2; q^4)_inf``.
    """
    A2 = A * A
    total = QSeries([ZERO], order)
    r = 0
    while 2 * triangular(r) <= order:
        num = pochhammer_finite(A2, 4, 2, r, order)
        den = pochhammer_finite(1, 2, 2, r, order)
        term = series_mul(num, series_inverse(den))
        shift = 2 * triangular(r)
        total = total + QSeries([ZERO] * shift + list(term.coeffs[: order + 1 - shift]))
        r += 1
    prefactor = QSeries([ONE, ZERO, -A2], order)
    lhs = series_mul(prefactor, total)
    rhs = series_mul(pochhammer_infinite(-1, 2, 2, order), pochhammer_infinite(A2, 2, 4, order))
    return lhs, rhs


def jtp_limit_window(L: int, order: int) -> int:
    """Largest m such that the finite triple product at level L matches the
    theta series (with a -> A) in every coefficient q^0..q^m; -1 if none."""
    lhs, _ = finite_jtp_sides(L, order)
    theta = theta_series(order, A)
    m = -1
    for k in range(order + 1):
        if lhs[k] != theta[k]:
            break
        m = k
    return m


def goellnitz_product_ints(order: int) -> list[int]:
    """``prod (1+q^(6m-4))(1+q^(6m-2))(1+q^(6m-1))``, the generating function of B(n)."""
    out = int_pochhammer(-1, 2, 6, None, order)
    out = int_series_mul(out, int_pochhammer(-1, 4, 6, None, order), order)
    return int_series_mul(out, int_pochhammer(-1, 5, 6, None, order), order)


def standard_vector_counts(n: int) -> dict[tuple[int, int, int], int]:
    """Distinct parts 2, 4, 5 mod 6 keyed by the number of parts in each class."""
    out: Counter = Counter()
    for p in enumerate_partitions(n, DISTINCT):
        if all(x % 6 in (2, 4, 5) for x in p):
            out[(sum(x % 6 == 2 for x in p), sum(x % 6 == 4 for x in p), sum(x % 6 == 5 for x in p))] += 1
    return dict(out)

