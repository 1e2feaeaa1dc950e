"""Exact truncated power series over the rationals, with q-polynomial coefficients.

Everything here is exact: coefficients are :class:`fractions.Fraction` or
:class:`QPolynomial`, and every division either divides exactly or raises
:class:`InexactDivision`.  The catalog functions at the bottom expand the
bivariate valley/flat series and the edge series of each path class.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "InexactDivision",
    "QPolynomial",
    "TruncatedSeries",
    "QPolySeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_div",
    "series_sqrt",
    "coefficient",
    "base_series",
    "catalog_delta_series",
    "edge_series_via_delta",
    "edge_series_closed",
    "format_series",
    "BASE_SERIES",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 12


class InexactDivision(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _fmt_frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


class QPolynomial:
    """A polynomial in the marker ``q`` with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def _coerce(cls, other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = QPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - dq + i] -= c * b
        return QPolynomial(quot), QPolynomial(rem[:dq] if dq > 0 else ())

    def exact_div(self, other) -> "QPolynomial":
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {rem}")
        return quot

    def __truediv__(self, other):
        return self.exact_div(other)

    def derivative(self) -> "QPolynomial":
        return QPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        return f"QPolynomial({[_fmt_frac(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = _fmt_frac(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if mag == 1 else f"{_fmt_frac(mag)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _div_coeff(a, b):
    if isinstance(a, QPolynomial) or isinstance(b, QPolynomial):
        return QPolynomial._coerce(a).exact_div(b)
    return a / b


class TruncatedSeries:
    """A power series in ``x`` known modulo ``x^(order+1)``.

    Coefficients are exact rationals.  Operands of a binary operation must
    share the truncation order.
    """

    __slots__ = ("coeffs",)

    _zero = Fraction(0)
    _one = Fraction(1)

    def __init__(self, coeffs: Iterable, order: int = None):
        cs = [self._convert(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            cs = cs[: order + 1] + [self._zero] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(cs)

    @staticmethod
    def _convert(c):
        return _frac(c)

    @classmethod
    def from_poly(cls, terms, order: int):
        """Build from a polynomial in x given as a sequence or ``{power: coeff}``."""
        if isinstance(terms, dict):
            cs = [cls._zero] * (order + 1)
            for k, c in terms.items():
                if k <= order:
                    cs[k] = cs[k] + cls._convert(c)
            return cls(cs)
        return cls(list(terms), order)

    @classmethod
    def constant(cls, c, order: int):
        return cls.from_poly({0: c}, order)

    @classmethod
    def x(cls, order: int):
        return cls.from_poly({1: 1}, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == list(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]})"

    def _check(self, other) -> "TruncatedSeries":
        if isinstance(other, QPolynomial):
            return QPolySeries.constant(other, self.order)
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")
        return other

    def _like(self, other):
        # mixing scalar and q-polynomial series promotes to the latter
        if isinstance(other, QPolySeries) and not isinstance(self, QPolySeries):
            return QPolySeries(self.coeffs)
        return self

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        me = self._like(other)
        return type(me)(a + b for a, b in zip(me.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        me = self._like(other)
        return type(me)(a - b for a, b in zip(me.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        me = self._like(other)
        if not isinstance(other, QPolySeries) and isinstance(me, QPolySeries):
            other = QPolySeries(other.coeffs)
        a, b = me.coeffs, other.coeffs
        n = len(a)
        out = []
        for k in range(n):
            acc = me._zero
            for i in range(k + 1):
                ai = a[i]
                if ai:
                    acc = acc + ai * b[k - i]
            out.append(acc)
        return type(me)(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(type(self).constant(other, self.order), self)

    def __pow__(self, e: int):
        if e < 0:
            return series_div(type(self).constant(1, self.order), self ** (-e))
        out = type(self).constant(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order + 1`` if all vanish)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return len(self.coeffs)

    def shift(self, v: int):
        """Divide by ``x^v``; the first ``v`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:v]):
            raise InexactDivision(f"series is not divisible by x^{v}")
        return type(self)(self.coeffs[v:])

    def truncate(self, order: int):
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return type(self)(self.coeffs[: order + 1])

    def sqrt(self):
        return series_sqrt(self)


class QPolySeries(TruncatedSeries):
    """A truncated series whose coefficients are polynomials in ``q``."""

    __slots__ = ()

    _zero = QPolynomial()
    _one = QPolynomial((1,))

    @staticmethod
    def _convert(c):
        return QPolynomial._coerce(c)

    def at_q(self, value) -> TruncatedSeries:
        """Substitute a number for ``q``."""
        return TruncatedSeries(c(value) for c in self.coeffs)

    def q_derivative(self) -> "QPolySeries":
        return QPolySeries(c.derivative() for c in self.coeffs)

    def edge_series(self) -> TruncatedSeries:
        """``d/dq`` at ``q = 1``: turns a cover-count series into an edge series."""
        return self.q_derivative().at_q(1)

    def __repr__(self) -> str:
        return f"QPolySeries({[str(c) for c in self.coeffs]})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b``.

    If ``b`` has valuation ``v > 0``, both operands are first divided by
    ``x^v`` (``a`` must vanish below ``v``), so the result has order
    ``N - v``.  For q-polynomial coefficients every step is an exact
    polynomial division.
    """
    if a.order != b.order:
        raise ValueError(f"truncation order mismatch: {a.order} vs {b.order}")
    v = b.valuation()
    if v > b.order:
        raise ZeroDivisionError("division by the zero series")
    if v:
        a, b = a.shift(v), b.shift(v)
    cls = QPolySeries if isinstance(a, QPolySeries) or isinstance(b, QPolySeries) else TruncatedSeries
    ac, bc = a.coeffs, b.coeffs
    b0 = bc[0]
    out = []
    for k in range(len(ac)):
        acc = ac[k]
        for i in range(k):
            bi = bc[k - i]
            if bi:
                acc = acc - out[i] * bi
        out.append(_div_coeff(acc, b0))
    return cls(out)


def series_sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """The square root with constant term 1, by coefficient peeling."""
    c = a.coeffs
    if c[0] != 1:
        raise ValueError(f"series_sqrt needs constant term 1, got {c[0]}")
    half = Fraction(1, 2)
    s = [c[0]]
    for k in range(1, len(c)):
        acc = c[k]
        for i in range(1, k):
            acc = acc - s[i] * s[k - i]
        s.append(acc * half)
    return type(a)(s)


def coefficient(series: TruncatedSeries, n: int):
    if n < 0 or n > series.order:
        raise IndexError(f"coefficient {n} requested from a series of order {series.order}")
    return series.coeffs[n]


# --- the base counting series -------------------------------------------------

def _sqrt_poly(terms, order: int, cls=TruncatedSeries):
    return series_sqrt(cls.from_poly(terms, order))


def _central_binomial_gf(N):
    return 1 / _sqrt_poly({0: 1, 1: -4}, N)


def _catalan_gf(N):
    M = N + 1
    num = 1 - _sqrt_poly({0: 1, 1: -4}, M)
    return series_div(num, TruncatedSeries.from_poly({1: 2}, M))


def _central_trinomial_gf(N):
    return 1 / _sqrt_poly({0: 1, 1: -2, 2: -3}, N)


def _motzkin_gf(N):
    M = N + 2
    num = TruncatedSeries.from_poly({0: 1, 1: -1}, M) - _sqrt_poly({0: 1, 1: -2, 2: -3}, M)
    return series_div(num, TruncatedSeries.from_poly({2: 2}, M))


def _delannoy_gf(N):
    return 1 / _sqrt_poly({0: 1, 1: -6, 2: 1}, N)


def _schroder_gf(N):
    M = N + 1
    num = TruncatedSeries.from_poly({0: 1, 1: -1}, M) - _sqrt_poly({0: 1, 1: -6, 2: 1}, M)
    return series_div(num, TruncatedSeries.from_poly({1: 2}, M))


BASE_SERIES = {
    "B": _central_binomial_gf,
    "C": _catalan_gf,
    "T": _central_trinomial_gf,
    "M": _motzkin_gf,
    "d": _delannoy_gf,
    "r": _schroder_gf,
}


def base_series(name: str, N: int) -> TruncatedSeries:
    """One of ``B, C, T, M, d, r`` (binomial, Catalan, trinomial, Motzkin,
    Delannoy, Schröder), expanded from its radical closed form."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    try:
        build = BASE_SERIES[name]
    except KeyError:
        raise ValueError(f"unknown base series {name!r}; expected one of {sorted(BASE_SERIES)}") from None
    return build(N)


# --- cover-count series ----------------------------------------------------------

def _class_name(cls) -> str:
    from .paths import get_class

    return get_class(cls).name


def _qpoly(terms, order):
    return QPolySeries.from_poly(terms, order)


def _dyck_delta(N):
    q = QPolynomial.q()
    M = N + 1
    disc = _qpoly({0: 1, 1: -2 * (1 + q), 2: (1 - q) ** 2}, M)
    num = _qpoly({0: 1, 1: -(1 - q)}, M) - series_sqrt(disc)
    return series_div(num, _qpoly({1: 2 * q}, M))


def _grand_dyck_delta(N):
    q = QPolynomial.q()
    disc = _qpoly({0: 1, 1: -2 * (1 + q), 2: (1 - q) ** 2}, N)
    return 1 / series_sqrt(disc)


def _motzkin_disc(q, order):
    inner = _qpoly({0: 1, 1: -(1 + 2 * q), 2: -(1 - q * q), 3: (1 - q) ** 2}, order)
    return _qpoly({0: 1, 1: 1}, order) * inner


def _motzkin_delta(N):
    q = QPolynomial.q()
    M = N + 2
    num = _qpoly({0: 1, 1: -q, 2: -(1 - q)}, M) - series_sqrt(_motzkin_disc(q, M))
    return series_div(num, _qpoly({2: 2 * q}, M))


def _grand_motzkin_delta(N):
    q = QPolynomial.q()
    return _qpoly({0: 1, 1: 1 - q}, N) / series_sqrt(_motzkin_disc(q, N))


def _schroder_disc(q, order):
    return _qpoly({0: 1, 1: -2 * (1 + 2 * q), 2: (1 - 2 * q) ** 2}, order)


def _schroder_delta(N):
    q = QPolynomial.q()
    M = N + 1
    num = _qpoly({0: 1, 1: -1}, M) - series_sqrt(_schroder_disc(q, M))
    den = _qpoly({1: 2 * q, 2: 2 * q * (1 - q)}, M)
    return series_div(num, den)


def _grand_schroder_delta(N):
    q = QPolynomial.q()
    return 1 / series_sqrt(_schroder_disc(q, N))


def _fibonacci_delta(N):
    q = QPolynomial.q()
    num = _qpoly({0: 1, 1: 1 - q}, N)
    den = _qpoly({0: 1, 1: -q, 2: -1, 3: -(1 - q)}, N)
    return num / den


def _grand_fibonacci_delta(N):
    q = QPolynomial.q()
    num = _qpoly({0: 1, 1: 1 - q}, N)
    den = _qpoly({0: 1, 1: -q, 2: -(1 + q), 3: -(1 - q * q)}, N)
    return num / den


_DELTA_CATALOG = {
    "DD": _dyck_delta,
    "GD": _grand_dyck_delta,
    "MM": _motzkin_delta,
    "GM": _grand_motzkin_delta,
    "SS": _schroder_delta,
    "GS": _grand_schroder_delta,
    "FF": _fibonacci_delta,
    "GF": _grand_fibonacci_delta,
}


def catalog_delta_series(cls, N: int) -> QPolySeries:
    """Bivariate series: coefficient of ``x^n`` is the polynomial
    ``sum over paths of size n of q^(number of elements covering the path)``."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    return _DELTA_CATALOG[_class_name(cls)](N)


def edge_series_via_delta(cls, N: int) -> TruncatedSeries:
    return catalog_delta_series(cls, N).edge_series()


# --- closed-form edge series ----------------------------------------------------

def _poly(terms, order):
    return TruncatedSeries.from_poly(terms, order)


def _edges_dyck(N):
    M = N + 1
    root = _sqrt_poly({0: 1, 1: -4}, M)
    num = _poly({0: 1, 1: -3}, M) - _poly({0: 1, 1: -1}, M) * root
    return series_div(num, _poly({1: 2}, M) * root)


def _edges_grand_dyck(N):
    root = _sqrt_poly({0: 1, 1: -4}, N)
    return _poly({1: 1}, N) / (_poly({0: 1, 1: -4}, N) * root)


def _edges_motzkin(N):
    M = N + 2
    root = _sqrt_poly({0: 1, 1: -2, 2: -3}, M)
    inner = _poly({0: 1, 1: -2, 2: -1}, M) - _poly({0: 1, 1: -1}, M) * root
    num = _poly({0: 1, 1: 1}, M) * inner
    return series_div(num, _poly({2: 2}, M) * root)


def _edges_grand_motzkin(N):
    root = _sqrt_poly({0: 1, 1: -2, 2: -3}, N)
    return _poly({2: 2}, N) / (_poly({0: 1, 1: -3}, N) * root)


def _edges_schroder(N):
    M = N + 1
    root = _sqrt_poly({0: 1, 1: -6, 2: 1}, M)
    inner = _poly({0: 1, 1: -4, 2: 1}, M) - _poly({0: 1, 1: -1}, M) * root
    num = _poly({0: 1, 1: -1}, M) * inner
    return series_div(num, _poly({1: 2}, M) * root)


def _edges_grand_schroder(N):
    disc = _poly({0: 1, 1: -6, 2: 1}, N)
    return _poly({1: 2, 2: -2}, N) / (disc * series_sqrt(disc))


def _edges_fibonacci(N):
    return _poly({2: 1}, N) / _poly({0: 1, 1: -1, 2: -1}, N) ** 2


def _edges_grand_fibonacci(N):
    return _poly({2: 2}, N) / _poly({0: 1, 1: -1, 2: -2}, N) ** 2


_EDGE_CATALOG = {
    "DD": _edges_dyck,
    "GD": _edges_grand_dyck,
    "MM": _edges_motzkin,
    "GM": _edges_grand_motzkin,
    "SS": _edges_schroder,
    "GS": _edges_grand_schroder,
    "FF": _edges_fibonacci,
    "GF": _edges_grand_fibonacci,
}


def edge_series_closed(cls, N: int) -> TruncatedSeries:
    """Edge generating series of the class, expanded from its closed form."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    return _EDGE_CATALOG[_class_name(cls)](N)


def format_series(series: Union[TruncatedSeries, Sequence], fmt: str = "text") -> str:
    """Dump coefficients one per line (``p/q`` for non-integers) or as a JSON array of strings."""
    items = [c if isinstance(c, QPolynomial) else _frac(c) for c in series]
    texts = [str(c) if isinstance(c, QPolynomial) else _fmt_frac(c) for c in items]
    if fmt == "json":
        return json.dumps(texts)
    if fmt == "text":
        return "\n".join(texts)
    raise ValueError(f"unknown series format {fmt!r}")
