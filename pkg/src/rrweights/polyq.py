"""Exact Laurent polynomials in a, b, c, A and truncated q-series over them.

``q`` is never a polynomial symbol; it is the series variable of
:class:`QSeries`, and every truncation decision lives there.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from typing import Union

SYMBOLS = ("a", "b", "c", "A")
_INDEX = {s: i for i, s in enumerate(SYMBOLS)}
_ZERO_EXP = (0,) * len(SYMBOLS)

Exponents = tuple[int, ...]
Coefficient = Union["LaurentPoly", int]


class LaurentPoly:
    """Sparse integer-coefficient Laurent polynomial over :data:`SYMBOLS`.

    Terms are stored as ``{exponent_vector: coefficient}`` with zero
    coefficients dropped, so equality of the maps is equality of polynomials.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        if terms:
            for exp, coef in terms.items():
                if len(exp) != len(SYMBOLS):
                    raise ValueError(f"exponent vector {exp!r} has wrong length")
                if coef:
                    clean[tuple(exp)] = int(coef)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponents, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: int) -> LaurentPoly:
        return cls._raw({_ZERO_EXP: value} if value else {})

    @classmethod
    def var(cls, name: str) -> LaurentPoly:
        return cls.monomial(1, **{name: 1})

    @classmethod
    def monomial(cls, coef: int = 1, **exponents: int) -> LaurentPoly:
        exp = [0] * len(SYMBOLS)
        for name, e in exponents.items():
            try:
                exp[_INDEX[name]] = e
            except KeyError:
                raise ValueError(f"unknown symbol {name!r}") from None
        return cls._raw({tuple(exp): coef} if coef else {})

    @classmethod
    def coerce(cls, value: Coefficient) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPoly")

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Coefficient) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, coef in other._terms.items():
            v = out.get(exp, 0) + coef
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coefficient) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coefficient) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._terms) > len(other._terms):
            small, big = other._terms, self._terms
        else:
            small, big = self._terms, other._terms
        out: dict[Exponents, int] = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit_monomial():
                raise ValueError("negative power of a non-monomial")
            ((exp, coef),) = self._terms.items()
            return LaurentPoly._raw({tuple(e * k for e in exp): coef ** (-k)})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_unit_monomial(self) -> bool:
        """True for ``±`` a single monomial, the only invertible elements."""
        if len(self._terms) != 1:
            return False
        (coef,) = self._terms.values()
        return coef in (1, -1)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def constant_term(self) -> int:
        return self._terms.get(_ZERO_EXP, 0)

    def shift(self, exponents: Exponents, coef: int = 1) -> LaurentPoly:
        """Multiply by the monomial ``coef * x**exponents``."""
        if coef == 0:
            return LaurentPoly()
        return LaurentPoly._raw(
            {tuple(x + y for x, y in zip(e, exponents)): c * coef for e, c in self._terms.items()}
        )

    def substitute(self, bindings: Mapping[str, Coefficient]) -> LaurentPoly:
        """Replace symbols by polynomials or integers.

        A symbol that appears with a negative exponent may only be bound to a
        unit monomial, otherwise the result would leave the Laurent ring.
        """
        subs: dict[int, LaurentPoly] = {}
        for name, value in bindings.items():
            if name not in _INDEX:
                raise ValueError(f"unknown symbol {name!r}")
            subs[_INDEX[name]] = LaurentPoly.coerce(value)
        for idx, value in subs.items():
            if any(exp[idx] < 0 for exp in self._terms) and not value.is_unit_monomial():
                raise ValueError("non-invertible substitution")

        powers: dict[tuple[int, int], LaurentPoly] = {}
        out: dict[Exponents, int] = {}
        for exp, coef in self._terms.items():
            kept = list(exp)
            term = LaurentPoly.const(1)
            for idx, value in subs.items():
                e = exp[idx]
                kept[idx] = 0
                if e:
                    key = (idx, e)
                    if key not in powers:
                        powers[key] = value ** e
                    term = term * powers[key]
            for e2, c2 in term.shift(tuple(kept), coef).items():
                out[e2] = out.get(e2, 0) + c2
        return LaurentPoly._raw({e: v for e, v in out.items() if v})

    def evaluate(self, **values: int) -> int:
        """Evaluate at integer values of every symbol that occurs."""
        poly = self.substitute(values)
        if not poly.is_constant():
            raise ValueError("not all symbols were bound")
        return poly.constant_term()

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in the canonical display order (total degree, then exponents)."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, e in zip(SYMBOLS, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if coef < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def poly_add(p: Coefficient, r: Coefficient) -> LaurentPoly:
    return LaurentPoly.coerce(p) + LaurentPoly.coerce(r)


def poly_mul(p: Coefficient, r: Coefficient) -> LaurentPoly:
    return LaurentPoly.coerce(p) * LaurentPoly.coerce(r)


def poly_substitute(p: LaurentPoly, bindings: Mapping[str, Coefficient]) -> LaurentPoly:
    return p.substitute(bindings)


a = LaurentPoly.var("a")
b = LaurentPoly.var("b")
c = LaurentPoly.var("c")
A = LaurentPoly.var("A")
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class QSeries:
    """Power series in q with :class:`LaurentPoly` coefficients, exact mod q^(order+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient], order: int | None = None):
        cs = [LaurentPoly.coerce(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs: tuple[LaurentPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls([ONE], order)

    @classmethod
    def monomial(cls, coef: Coefficient, power: int, order: int) -> QSeries:
        cs = [ZERO] * (order + 1)
        if 0 <= power <= order:
            cs[power] = LaurentPoly.coerce(coef)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def truncate(self, order: int) -> QSeries:
        return QSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> QSeries:
        return QSeries([-x for x in self.coeffs])

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def __mul__(self, other: QSeries | Coefficient) -> QSeries:
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return QSeries([x * other for x in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other: QSeries) -> QSeries:
        return series_mul(self, series_inverse(other))

    def map(self, fn) -> QSeries:
        return QSeries([fn(x) for x in self.coeffs])

    def substitute(self, bindings: Mapping[str, Coefficient]) -> QSeries:
        return self.map(lambda x: x.substitute(bindings))

    def evaluate(self, **values: int) -> list[int]:
        return [x.evaluate(**values) for x in self.coeffs]

    def as_ints(self) -> list[int]:
        """Coefficients as integers; fails if any coefficient involves a symbol."""
        out = []
        for x in self.coeffs:
            if not x.is_constant():
                raise ValueError(f"coefficient {x} is not an integer")
            out.append(x.constant_term())
        return out

    def __str__(self) -> str:
        parts = []
        for k, x in enumerate(self.coeffs):
            if not x:
                continue
            qk = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not qk:
                parts.append(f"({x})" if len(x) > 1 else str(x))
            elif x == ONE:
                parts.append(qk)
            else:
                parts.append(f"({x})*{qk}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"QSeries({self})"


def series_mul(x: QSeries, y: QSeries) -> QSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    n = min(x.order, y.order)
    xs, ys = x.coeffs, y.coeffs
    out = [ZERO] * (n + 1)
    for i in range(n + 1):
        xi = xs[i]
        if not xi:
            continue
        for j in range(n + 1 - i):
            yj = ys[j]
            if yj:
                out[i + j] = out[i + j] + xi * yj
    return QSeries(out)


def series_scale(x: QSeries, mono: Coefficient, qshift: int = 0) -> QSeries:
    """Multiply every coefficient by ``mono`` and the series by ``q**qshift``."""
    if qshift < 0:
        raise ValueError("qshift must be nonnegative")
    mono = LaurentPoly.coerce(mono)
    n = x.order
    out = [ZERO] * (n + 1)
    for k in range(n + 1 - qshift):
        out[k + qshift] = x.coeffs[k] * mono
    return QSeries(out)


def series_inverse(x: QSeries) -> QSeries:
    """Reciprocal of a series whose constant term is ``±1``."""
    c0 = x.coeffs[0]
    if c0 not in (ONE, -ONE):
        raise ValueError("series is not invertible: constant term must be ±1")
    sign = c0.constant_term()
    n = x.order
    inv = [ZERO] * (n + 1)
    inv[0] = c0
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, k + 1):
            if x.coeffs[j] and inv[k - j]:
                acc = acc + x.coeffs[j] * inv[k - j]
        inv[k] = acc * (-sign)
    return QSeries(inv)


def _times_binomial(cs: list[LaurentPoly], coef: LaurentPoly, power: int) -> None:
    """In place: cs *= (1 - coef*q^power), truncated at len(cs)-1."""
    for k in range(len(cs) - 1, power - 1, -1):
        src = cs[k - power]
        if src:
            cs[k] = cs[k] - coef * src


def pochhammer_finite(coef: Coefficient, start: int, step: int, count: int, order: int) -> QSeries:
    """``prod_{j<count} (1 - coef * q^(start + j*step))`` truncated at ``q^order``."""
    if start < 0:
        raise ValueError("start must be nonnegative")
    if step <= 0:
        raise ValueError("step must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    coef = LaurentPoly.coerce(coef)
    cs = [ONE] + [ZERO] * order
    for j in range(count):
        power = start + j * step
        if power > order:
            break
        _times_binomial(cs, coef, power)
    return QSeries(cs)


def pochhammer_infinite(coef: Coefficient, start: int, step: int, order: int) -> QSeries:
    """``prod_{j>=0} (1 - coef * q^(start + j*step))`` truncated at ``q^order``."""
    if start <= 0:
        raise ValueError("non-convergent truncation")
    count = max(0, -(-(order - start) // step) + 1)
    return pochhammer_finite(coef, start, step, count, order)


# Integer-coefficient helpers: the bulk of the q-series work in this package
# multiplies integer series by a single monomial, and plain int lists are much
# faster than LaurentPoly coefficients there.

def int_series_mul(x: Sequence[int], y: Sequence[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, xi in enumerate(x[: order + 1]):
        if xi:
            for j, yj in enumerate(y[: order + 1 - i]):
                if yj:
                    out[i + j] += xi * yj
    return out


def int_series_inverse(x: Sequence[int], order: int) -> list[int]:
    if x[0] not in (1, -1):
        raise ValueError("series is not invertible: constant term must be ±1")
    xs = list(x[: order + 1]) + [0] * max(0, order + 1 - len(x))
    inv = [0] * (order + 1)
    inv[0] = xs[0]
    for k in range(1, order + 1):
        acc = 0
        for j in range(1, k + 1):
            if xs[j]:
                acc += xs[j] * inv[k - j]
        inv[k] = -acc * xs[0]
    return inv


def int_pochhammer(coef: int, start: int, step: int, count: int | None, order: int) -> list[int]:
    """Integer version of :func:`pochhammer_finite`; ``count=None`` means infinite."""
    if count is None:
        if start <= 0:
            raise ValueError("non-convergent truncation")
        count = max(0, -(-(order - start) // step) + 1)
    cs = [1] + [0] * order
    for j in range(count):
        power = start + j * step
        if power > order:
            break
        for k in range(order, power - 1, -1):
            if cs[k - power]:
                cs[k] -= coef * cs[k - power]
    return cs


def _binomial_degree(n: int, m: int, qstep: int) -> int:
    return m * (n - m) * qstep


def gaussian_binomial(n: int, m: int, qstep: int = 1, order: int | None = None) -> QSeries:
    """Gaussian binomial ``[n, m]`` in base ``q**qstep``.

    Computed as ``(q)_n / ((q)_m (q)_{n-m})`` by series division. Zero outside
    ``0 <= m <= n``. ``order=None`` keeps the full polynomial.
    """
    return QSeries(gaussian_binomial_ints(n, m, qstep, order))


def gaussian_binomial_ints(n: int, m: int, qstep: int = 1, order: int | None = None) -> list[int]:
    if qstep <= 0:
        raise ValueError("qstep must be positive")
    if order is None:
        order = max(0, _binomial_degree(n, m, qstep)) if 0 <= m <= n else 0
    if m < 0 or m > n:
        return [0] * (order + 1)
    num = int_pochhammer(1, qstep, qstep, n, order)
    den = int_series_mul(
        int_pochhammer(1, qstep, qstep, m, order),
        int_pochhammer(1, qstep, qstep, n - m, order),
        order,
    )
    return int_series_mul(num, int_series_inverse(den, order), order)


def triangular(m: int) -> int:
    """``m(m+1)/2``, with ``triangular(-1) == 0``."""
    if m < -1:
        raise ValueError(f"triangular number undefined for m={m}")
    return m * (m + 1) // 2
