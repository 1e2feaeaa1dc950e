"""Exact closed-form counts, Hasse indices, asymptotic estimates and the
Boolean / tamed classification of the path families.

Every sequence is computed with integer recurrences; floating point only
appears in the asymptotic estimators, which work in log space so that values
like ``(1 + sqrt 2)^600`` do not overflow.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

from .paths import get_class

__all__ = [
    "IdentityMismatch",
    "SEQUENCES",
    "sequence_value",
    "trinomial",
    "vertex_count",
    "edge_count_formula",
    "edge_count_identities",
    "hasse_index_exact",
    "ASYMPTOTIC_QUANTITIES",
    "asymptotic_log_estimate",
    "asymptotic_estimate",
    "exact_quantity",
    "AsymptoticReport",
    "asymptotic_report",
    "ClassificationReport",
    "classification_report",
    "report_table",
]

PHI = (1 + math.sqrt(5)) / 2
SILVER = 1 + math.sqrt(2)
QUASI_BOOLEAN_BOUND = 0.1


class IdentityMismatch(AssertionError):
    """Two identities for the same edge count disagree."""


# --- base sequences ----------------------------------------------------------

_TRINOMIAL_ROWS: list[tuple[int, ...]] = [(1,)]
_ROWS_LOCK = threading.Lock()


def _trinomial_row(n: int) -> tuple[int, ...]:
    """Coefficients of ``(1 + x + x^2)^n``, extending a shared table of rows."""
    with _ROWS_LOCK:
        rows = _TRINOMIAL_ROWS
        while len(rows) <= n:
            prev = rows[-1]
            padded = (0, 0) + prev + (0, 0)
            rows.append(tuple(padded[i] + padded[i + 1] + padded[i + 2] for i in range(len(prev) + 2)))
        return rows[n]


def trinomial(n: int, k: int) -> int:
    """Trinomial coefficient; zero outside ``0 <= k <= 2n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > 2 * n:
        return 0
    return _trinomial_row(n)[k]


def _motzkin(n: int) -> int:
    a, b = 1, 1  # M_0, M_1
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, ((2 * m + 1) * b + 3 * (m - 1) * a) // (m + 2)
    return b


def _central_delannoy(n: int) -> int:
    a, b = 1, 3
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (3 * (2 * m - 1) * b - (m - 1) * a) // m
    return b


def _large_schroder(n: int) -> int:
    a, b = 1, 2
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (3 * (2 * m - 1) * b - (m - 2) * a) // (m + 1)
    return b


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _lucas(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


SEQUENCES = {
    "central_binomial": lambda n: comb(2 * n, n),
    "catalan": lambda n: comb(2 * n, n) // (n + 1),
    "central_trinomial": lambda n: trinomial(n, n),
    "motzkin": _motzkin,
    "central_delannoy": _central_delannoy,
    "large_schroder": _large_schroder,
    "fibonacci": _fibonacci,
    "lucas": _lucas,
}


def sequence_value(name: str, n: int, k: int = None) -> int:
    """Value of a named counting sequence at ``n`` (``trinomial`` also takes ``k``)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if name == "trinomial":
        if k is None or not 0 <= k <= 2 * n:
            raise ValueError(f"trinomial({n}, {k}) needs 0 <= k <= {2 * n}")
        return trinomial(n, k)
    try:
        return SEQUENCES[name](n)
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None


def vertex_count(cls, n: int) -> int:
    """``|P_n|``: the number of paths of the class at size ``n``."""
    name = get_class(cls).name
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if name == "DD":
        return SEQUENCES["catalan"](n)
    if name == "GD":
        return comb(2 * n, n)
    if name == "MM":
        return _motzkin(n)
    if name == "GM":
        return trinomial(n, n)
    if name == "SS":
        return _large_schroder(n)
    if name == "GS":
        return _central_delannoy(n)
    if name == "FF":
        return _fibonacci(n + 1)
    num = 2 ** (n + 1) + (-1) ** n
    assert num % 3 == 0
    return num // 3


# --- edge-count identities ----------------------------------------------------

def _as_int(v, what: str) -> int:
    v = Fraction(v)
    if v.denominator != 1:
        raise IdentityMismatch(f"{what} is not an integer: {v}")
    return v.numerator


def _dyck_identities(n):
    if n < 2:
        return {"binomial": 0, "index": 0}
    half = Fraction(comb(2 * n, n) * (n - 1), 2 * (n + 1))
    return {"binomial": comb(2 * n - 1, n - 2), "index": _as_int(half, "l(D_n)")}


def _grand_dyck_identities(n):
    return {"binomial": _as_int(Fraction(comb(2 * n, n) * n, 2), "l(GD_n)")}


def _motzkin_identities(n):
    if n == 0:
        return {"trinomial-motzkin": 0}
    out = {
        "trinomial-motzkin": trinomial(n, n) - _motzkin(n) + trinomial(n - 1, n - 1) - _motzkin(n - 1),
    }
    if n >= 3:
        out["shifted-trinomial"] = trinomial(n, n - 2) + trinomial(n - 1, n - 3)
    s = sum(Fraction(comb(n, k) * comb(n - k, k) * k * (n - k), k + 1) for k in range(n // 2 + 1))
    out["binomial-sum"] = _as_int(Fraction(2, n) * s, "Motzkin binomial sum")
    return out


def _grand_motzkin_identities(n):
    if n < 2:
        return {"trinomial-sum": 0, "central-binomial-sum": 0, "alternating-sum": 0}
    m = n - 2
    first = 2 * sum(trinomial(k, k) * 3 ** (m - k) for k in range(m + 1))
    second = Fraction(2, 4 ** m) * sum(
        comb(2 * k, k) * comb(2 * m - 2 * k, m - k) * (2 * k + 1) * 3 ** k * (-1) ** (m - k)
        for k in range(m + 1)
    )
    third = 2 * sum(comb(m + 1, k + 1) * comb(2 * k, k) * (-1) ** k * 3 ** (m - k) for k in range(m + 1))
    return {
        "trinomial-sum": first,
        "central-binomial-sum": _as_int(second, "Grand Motzkin central binomial sum"),
        "alternating-sum": third,
    }


def _multiset(n, k):
    # ((n multichoose k)) = n(n+1)...(n+k-1)/k!
    if k == 0:
        return 1
    return comb(n + k - 1, k)


def _schroder_identities(n):
    d, r = _central_delannoy, _large_schroder
    first = d(n) - r(n) - (d(n - 1) - r(n - 1) if n else 0)
    second = sum(Fraction(_multiset(2 * k, n - k) * comb(2 * k, k) * k, k + 1) for k in range(n + 1))
    return {"delannoy-schroder": first, "multiset-sum": _as_int(second, "Schröder multiset sum")}


def _grand_schroder_identities(n):
    first = 2 * sum(comb(n + k, 2 * k) * comb(2 * k, k) * (n - k) for k in range(n + 1))
    second = sum(
        Fraction(comb(n, k) * comb(n - k, k) * (n - 2 * k) * (n + k + 2), k + 1)
        * 2 ** (k + 1)
        * Fraction(3) ** (n - 2 * k - 2)
        for k in range(n // 2 + 1)
    )
    return {"binomial-sum": first, "trinomial-split-sum": _as_int(second, "Grand Schröder sum")}


def _fibonacci_identities(n):
    num = n * _lucas(n) - _fibonacci(n)
    if num % 5:
        raise IdentityMismatch(f"n L_n - F_n = {num} is not divisible by 5 at n = {n}")
    return {"lucas-fibonacci": num // 5}


def _grand_fibonacci_identities(n):
    num = (3 * n - 1) * 2 ** (n + 1) + (-1) ** n * 2 * (3 * n + 1)
    if num % 27:
        raise IdentityMismatch(f"Grand Fibonacci numerator {num} is not divisible by 27 at n = {n}")
    return {"partial-fractions": num // 27}


_IDENTITIES = {
    "DD": _dyck_identities,
    "GD": _grand_dyck_identities,
    "MM": _motzkin_identities,
    "GM": _grand_motzkin_identities,
    "SS": _schroder_identities,
    "GS": _grand_schroder_identities,
    "FF": _fibonacci_identities,
    "GF": _grand_fibonacci_identities,
}


def edge_count_identities(cls, n: int) -> dict[str, int]:
    """Every closed-form identity for ``l(P_n)`` that applies at ``n``, by name."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _IDENTITIES[get_class(cls).name](n)


def edge_count_formula(cls, n: int) -> int:
    """Number of Hasse-diagram edges of ``P_n``; all identities must agree."""
    values = edge_count_identities(cls, n)
    distinct = set(values.values())
    if len(distinct) != 1:
        raise IdentityMismatch(f"{get_class(cls).name} identities disagree at n = {n}: {values}")
    return distinct.pop()


def hasse_index_exact(cls, n: int) -> Fraction:
    """Edges per vertex, as a reduced fraction."""
    return Fraction(edge_count_formula(cls, n), vertex_count(cls, n))


# --- asymptotics -----------------------------------------------------------------

_LOG_SILVER = math.log(SILVER)
_LOG_PHI = math.log(PHI)
_LOG3 = math.log(3)
_LOG2 = math.log(2)
_SQRT2 = math.sqrt(2)
_PI = math.pi


def _l(v: float) -> float:
    return math.log(v)


# each entry maps n to the log of the leading-order estimate
_LOG_ESTIMATES = {
    "central_trinomial": lambda n: n * _LOG3 - _LOG2 + 0.5 * _l(3 / (n * _PI)),
    "motzkin": lambda n: (n + 1) * _LOG3 - _l(2 * n) + 0.5 * _l(3 / (n * _PI)),
    "central_delannoy": lambda n: (2 * n + 1) * _LOG_SILVER - _l(2 * math.sqrt(_SQRT2 * n * _PI)),
    "large_schroder": lambda n: (2 * n + 1) * _LOG_SILVER - _l(n * math.sqrt(2 * _SQRT2 * n * _PI)),
    "fibonacci": lambda n: n * _LOG_PHI - 0.5 * _l(5),
    "lucas": lambda n: n * _LOG_PHI,
    "edges_MM": lambda n: _LOG2 + n * _LOG3 - 0.5 * _l(3 * n * _PI),
    "index_MM": lambda n: _l(4 * n / 9),
    "edges_GM": lambda n: _LOG2 + (n - 2) * _LOG3 + 0.5 * _l(3 * n / _PI),
    "index_GM": lambda n: _l(4 * n / 9),
    "edges_SS": lambda n: 2 * n * _LOG_SILVER - 0.5 * _l(_SQRT2 * n * _PI),
    "index_SS": lambda n: _l((2 - _SQRT2) * n),
    "edges_GS": lambda n: 0.5 * _l(n / (2 * _SQRT2 * _PI)) + 2 * n * _LOG_SILVER,
    "index_GS": lambda n: _l((2 - _SQRT2) * n),
    "edges_FF": lambda n: _l(n / 5) + n * _LOG_PHI,
    "index_FF": lambda n: _l(n / (math.sqrt(5) * PHI)),
    "edges_GF": lambda n: _l(n / 9) + (n + 1) * _LOG2,
    "index_GF": lambda n: _l(n / 3),
    "index_DD": lambda n: _l(n / 2),
    "index_GD": lambda n: _l(n / 2),
}

ASYMPTOTIC_QUANTITIES = tuple(_LOG_ESTIMATES)


def asymptotic_log_estimate(quantity: str, n: int) -> float:
    """Natural log of the leading-order estimate for ``quantity`` at ``n``."""
    if n < 1:
        raise ValueError(f"asymptotic estimates need n >= 1, got {n}")
    try:
        return _LOG_ESTIMATES[quantity](n)
    except KeyError:
        raise ValueError(f"unknown asymptotic quantity {quantity!r}") from None


def asymptotic_estimate(quantity: str, n: int) -> float:
    """The estimate itself; ``inf`` if it does not fit in a double."""
    try:
        return math.exp(asymptotic_log_estimate(quantity, n))
    except OverflowError:
        return math.inf


def exact_quantity(quantity: str, n: int):
    """Exact value matching an asymptotic quantity name (int or Fraction)."""
    if quantity in SEQUENCES:
        return SEQUENCES[quantity](n)
    kind, _, cls = quantity.partition("_")
    if kind == "edges":
        return edge_count_formula(cls, n)
    if kind == "index":
        return hasse_index_exact(cls, n)
    raise ValueError(f"unknown asymptotic quantity {quantity!r}")


def _log_exact(v) -> float:
    v = Fraction(v)
    return math.log(v.numerator) - math.log(v.denominator)


@dataclass(frozen=True)
class AsymptoticReport:
    quantity: str
    n: int
    exact: object
    estimate: float
    ratio: float
    log_gap: float  # log(exact) - log(estimate)


def asymptotic_report(quantity: str, n: int) -> AsymptoticReport:
    exact = exact_quantity(quantity, n)
    gap = _log_exact(exact) - asymptotic_log_estimate(quantity, n)
    return AsymptoticReport(quantity, n, exact, asymptotic_estimate(quantity, n), math.exp(gap), gap)


# --- classification ---------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    cls: str
    index_form: str
    slope: float  # lim i(P_n) / n
    c: float  # |slope - 1/2|
    category: str  # boolean | asymptotically_boolean | asymptotically_quasi_boolean | not_quasi_boolean
    tamed: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))


# (index form, limiting slope, exact index equals n/2 for every n)
_INDEX_FORMS = {
    "DD": ("(n-1)/2", 0.5, False),
    "GD": ("n/2", 0.5, True),
    "MM": ("~ (4/9) n", 4 / 9, False),
    "GM": ("~ (4/9) n", 4 / 9, False),
    "SS": ("~ (2 - sqrt 2) n", 2 - _SQRT2, False),
    "GS": ("~ (2 - sqrt 2) n", 2 - _SQRT2, False),
    "FF": ("~ n / (sqrt 5 phi)", 1 / (math.sqrt(5) * PHI), False),
    "GF": ("~ n / 3", 1 / 3, False),
}

_PAIRS = {"DD": "GD", "MM": "GM", "SS": "GS", "FF": "GF"}
_PAIRS.update({v: k for k, v in list(_PAIRS.items())})


def classification_report(cls) -> ClassificationReport:
    """Where the Hasse index of the family sits relative to the Boolean lattices."""
    name = get_class(cls).name
    form, slope, exact_half = _INDEX_FORMS[name]
    c = abs(slope - 0.5)
    if exact_half:
        category = "boolean"
    elif c == 0:
        category = "asymptotically_boolean"
    elif c <= QUASI_BOOLEAN_BOUND:
        category = "asymptotically_quasi_boolean"
    else:
        category = "not_quasi_boolean"
    other = _INDEX_FORMS[_PAIRS[name]][1]
    tamed = math.isclose(slope, other, rel_tol=1e-12)
    return ClassificationReport(name, form, slope, c, category, tamed)


def report_table(reports, fmt: str = "text") -> str:
    """Render classification reports as an aligned text table or JSON."""
    reports = list(reports)
    if fmt == "json":
        return json.dumps([asdict(r) for r in reports], indent=2)
    rows = [("class", "index", "slope", "c", "category", "tamed")]
    for r in reports:
        rows.append((r.cls, r.index_form, f"{r.slope:.6f}", f"{r.c:.6f}", r.category, str(r.tamed).lower()))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
