"""The "lies weakly below" order on a path class, its cover relation, cover
statistics, meet/join and Hasse summaries.

Covers are available two ways that share no code: local rewrite rules
(:func:`covers_by_rewrite`) and a transitive reduction of the raw height
comparison (:func:`covers_by_order`).
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np

from . import closedforms
from .paths import (
    ClassSpec,
    PathWord,
    get_class,
    heights,
    iter_class,
    occurrences,
    validate,
)
from .series import QPolynomial

__all__ = [
    "CapExceeded",
    "ClosureViolation",
    "ENUM_CAPS",
    "ORDER_CAPS",
    "MAX_CELLS_ENV",
    "env_max_cells",
    "check_cap",
    "below",
    "covers_by_rewrite",
    "covered_by_rewrite",
    "delta_count",
    "nabla_count",
    "hasse_reduction",
    "covers_by_order",
    "rewrite_edges",
    "edge_count_enum",
    "delta_nabla_totals",
    "delta_polynomial_enum",
    "nabla_polynomial_enum",
    "distribution_enum",
    "meet",
    "join",
    "HasseSummary",
    "hasse_summary",
    "edges_to_csv",
    "edges_to_adjacency_json",
]


class CapExceeded(RuntimeError):
    """A brute-force route was asked for a size beyond its cap."""


class ClosureViolation(RuntimeError):
    """A pointwise min/max profile could not be re-encoded as a path of the class."""


ENUM_CAPS = {"DD": 10, "MM": 10, "FF": 10, "GF": 10, "GD": 9, "GM": 9, "SS": 9, "GS": 8}
ORDER_CAPS = {"DD": 7, "MM": 7, "SS": 7, "FF": 7, "GD": 5, "GM": 5, "GS": 5, "GF": 5}
MAX_CELLS_ENV = "HASSE_PATHS_MAX_CELLS"


def env_max_cells() -> Optional[int]:
    raw = os.environ.get(MAX_CELLS_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}") from None


def check_cap(spec, n: int, route: str = "enum", force: bool = False) -> None:
    """Raise :class:`CapExceeded` if ``n`` is beyond the route's size cap.

    Setting ``HASSE_PATHS_MAX_CELLS`` admits sizes past the cap whose vertex
    count stays below that many paths.
    """
    spec = get_class(spec)
    if force:
        return
    caps = ENUM_CAPS if route == "enum" else ORDER_CAPS
    if n <= caps[spec.name]:
        return
    limit = env_max_cells()
    if limit is not None and closedforms.vertex_count(spec, n) <= limit:
        return
    raise CapExceeded(f"{route} route for {spec.name} is capped at n = {caps[spec.name]} (asked for {n})")


# --- order --------------------------------------------------------------------

def below(a: PathWord, b: PathWord, spec=None) -> bool:
    """True if ``a`` lies weakly below ``b`` at every integer abscissa."""
    if spec is not None:
        spec = get_class(spec)
        for p in (a, b):
            ok, why = validate(spec, p)
            if not ok:
                raise ValueError(f"{p} is not a {spec.name} path: {why}")
    ha, hb = heights(a), heights(b)
    if len(ha) != len(hb):
        raise ValueError(f"paths of different widths: {a} vs {b}")
    return all(x <= y for x, y in zip(ha, hb))


# --- covers by local rewriting -------------------------------------------------

# (pattern, replacement, where): where is "any", "axis" (occurrence starts at
# height 0) or "off" (starts away from the axis)
_UP_RULES = {
    "DD": [("DU", "UD", "any")],
    "GD": [("DU", "UD", "any")],
    "MM": [("HU", "UH", "any"), ("DH", "HD", "any"), ("DU", "HH", "any"), ("HH", "UD", "any")],
    "GM": [("HU", "UH", "any"), ("DH", "HD", "any"), ("DU", "HH", "any"), ("HH", "UD", "any")],
    "SS": [("H", "UD", "any"), ("DU", "H", "any")],
    "GS": [("H", "UD", "any"), ("DU", "H", "any")],
    "FF": [("HH", "UD", "any")],
    "GF": [("HH", "UD", "any"), ("DU", "HH", "axis")],
}

_DOWN_RULES = {
    "DD": [("UD", "DU", "off")],
    "GD": [("UD", "DU", "any")],
    "MM": [("UH", "HU", "any"), ("HD", "DH", "any"), ("UD", "HH", "any"), ("HH", "DU", "off")],
    "GM": [("UH", "HU", "any"), ("HD", "DH", "any"), ("UD", "HH", "any"), ("HH", "DU", "any")],
    "SS": [("H", "DU", "off"), ("UD", "H", "any")],
    "GS": [("H", "DU", "any"), ("UD", "H", "any")],
    "FF": [("UD", "HH", "any")],
    "GF": [("UD", "HH", "axis"), ("HH", "DU", "any")],
}


def _rewrite(path: PathWord, spec: ClassSpec, rules) -> set[PathWord]:
    word = path.word
    levels = path.levels
    out = set()
    for pattern, repl, where in rules:
        i = word.find(pattern)
        while i >= 0:
            if where == "any" or (where == "axis") == (levels[i] == 0):
                new = PathWord(word[:i] + repl + word[i + len(pattern):], path.flat)
                ok, why = validate(spec, new)
                if not ok:
                    raise AssertionError(f"rewrite {pattern}->{repl} of {path} left {spec.name}: {why}")
                out.add(new)
            i = word.find(pattern, i + 1)
    return out


def covers_by_rewrite(path: PathWord, spec) -> set[PathWord]:
    """Paths covering ``path``, found by one upward local rewrite."""
    spec = get_class(spec)
    return _rewrite(path, spec, _UP_RULES[spec.name])


def covered_by_rewrite(path: PathWord, spec) -> set[PathWord]:
    """Paths covered by ``path``, found by one downward local rewrite."""
    spec = get_class(spec)
    return _rewrite(path, spec, _DOWN_RULES[spec.name])


# --- cover statistics -----------------------------------------------------------

# sums of factor counts: (factor, "all" | "off" | "axis")
_DELTA_TERMS = {
    "DD": [("DU", "all")],
    "GD": [("DU", "all")],
    "MM": [("HU", "all"), ("DH", "all"), ("DU", "all"), ("HH", "all")],
    "GM": [("HU", "all"), ("DH", "all"), ("DU", "all"), ("HH", "all")],
    "SS": [("H", "all"), ("DU", "all")],
    "GS": [("H", "all"), ("DU", "all")],
    "FF": [("HH", "all")],
    "GF": [("HH", "all"), ("DU", "axis")],
}

_NABLA_TERMS = {
    "DD": [("UD", "off")],
    "GD": [("UD", "all")],
    "MM": [("UH", "all"), ("HD", "all"), ("UD", "all"), ("HH", "off")],
    "GM": [("UH", "all"), ("HD", "all"), ("UD", "all"), ("HH", "all")],
    "SS": [("H", "off"), ("UD", "all")],
    "GS": [("H", "all"), ("UD", "all")],
    "FF": [("UD", "all")],
    "GF": [("UD", "axis"), ("HH", "all")],
}


def _statistic(path: PathWord, terms) -> int:
    levels = None
    total = 0
    for factor, mode in terms:
        if mode == "all":
            total += occurrences(path, factor)
            continue
        if levels is None:
            levels = path.levels
        word = path.word
        i = word.find(factor)
        while i >= 0:
            if (levels[i] != 0) == (mode == "off"):
                total += 1
            i = word.find(factor, i + 1)
    return total


def delta_count(path: PathWord, spec) -> int:
    """``|Δγ|``: how many elements cover the path."""
    return _statistic(path, _DELTA_TERMS[get_class(spec).name])


def nabla_count(path: PathWord, spec) -> int:
    """``|∇γ|``: how many elements the path covers."""
    return _statistic(path, _NABLA_TERMS[get_class(spec).name])


# --- covers by transitive reduction ---------------------------------------------

def hasse_reduction(profiles) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)`` of the pointwise order on integer vectors.

    ``profiles`` is an ``(m, w)`` array; ``i < j`` in the order means
    ``profiles[i] <= profiles[j]`` componentwise and the rows differ.  The
    strict up-set of every row is stored as a Python-int bitset over rows
    sorted by coordinate sum; covers of a row are then peeled off in
    increasing sum order, discarding everything above a cover already found.
    """
    P = np.asarray(profiles, dtype=np.int64)
    m = len(P)
    if m == 0:
        return []
    if P.ndim == 1:
        P = P.reshape(m, 1)
    sums = P.sum(axis=1)
    order = np.argsort(sums, kind="stable")
    P = P[order]
    ups = []
    chunk = max(1, min(m, 4_000_000 // max(1, m * P.shape[1])))
    for start in range(0, m, chunk):
        block = P[start:start + chunk]
        le = (block[:, None, :] <= P[None, :, :]).all(axis=2)
        eq = (block[:, None, :] == P[None, :, :]).all(axis=2)
        strict = le & ~eq
        packed = np.packbits(strict, axis=1, bitorder="little")
        for row in packed:
            ups.append(int.from_bytes(row.tobytes(), "little"))
    edges = []
    for a in range(m):
        seen = 0
        todo = ups[a]
        while todo:
            low = todo & -todo
            b = low.bit_length() - 1
            edges.append((int(order[a]), int(order[b])))
            seen |= ups[b]
            todo &= ~seen
            todo &= ~low
    return edges


def covers_by_order(spec, n: int, force: bool = False) -> set[tuple[PathWord, PathWord]]:
    """Hasse-diagram edges ``(lower, upper)`` from the raw order on heights."""
    spec = get_class(spec)
    check_cap(spec, n, "order", force)
    paths = list(iter_class(spec, n))
    edges = hasse_reduction([heights(p) for p in paths])
    return {(paths[i], paths[j]) for i, j in edges}


def rewrite_edges(spec, n: int, force: bool = False) -> set[tuple[PathWord, PathWord]]:
    """Hasse-diagram edges ``(lower, upper)`` from the upward rewrite rules."""
    spec = get_class(spec)
    check_cap(spec, n, "enum", force)
    return {(p, c) for p in iter_class(spec, n) for c in covers_by_rewrite(p, spec)}


# --- enumeration route -------------------------------------------------------------

def distribution_enum(spec, n: int, force: bool = False) -> tuple[QPolynomial, QPolynomial]:
    """The Δ- and ∇-polynomials of ``P_n`` by exhaustive enumeration."""
    spec = get_class(spec)
    check_cap(spec, n, "enum", force)
    up: dict[int, int] = {}
    down: dict[int, int] = {}
    dterms, nterms = _DELTA_TERMS[spec.name], _NABLA_TERMS[spec.name]
    for p in iter_class(spec, n):
        d = _statistic(p, dterms)
        up[d] = up.get(d, 0) + 1
        k = _statistic(p, nterms)
        down[k] = down.get(k, 0) + 1

    def poly(hist):
        top = max(hist) if hist else 0
        return QPolynomial(hist.get(k, 0) for k in range(top + 1))

    return poly(up), poly(down)


def delta_polynomial_enum(spec, n: int, force: bool = False) -> QPolynomial:
    return distribution_enum(spec, n, force)[0]


def nabla_polynomial_enum(spec, n: int, force: bool = False) -> QPolynomial:
    return distribution_enum(spec, n, force)[1]


def delta_nabla_totals(spec, n: int, force: bool = False) -> tuple[int, int]:
    """``(Σ|Δγ|, Σ|∇γ|)`` over the class; both equal the edge count."""
    dp, np_ = distribution_enum(spec, n, force)
    return int(dp.derivative()(1)), int(np_.derivative()(1))


def edge_count_enum(spec, n: int, force: bool = False) -> int:
    """Edge count as the sum of ``|Δγ|`` over all paths of size ``n``."""
    spec = get_class(spec)
    check_cap(spec, n, "enum", force)
    terms = _DELTA_TERMS[spec.name]
    return sum(_statistic(p, terms) for p in iter_class(spec, n))


# --- meet and join ----------------------------------------------------------------

def _encode(profile: list[int], spec: ClassSpec) -> PathWord:
    letters = []
    x = 0
    w = len(profile) - 1
    while x < w:
        d = profile[x + 1] - profile[x]
        if d == 1:
            letters.append("U")
            x += 1
        elif d == -1:
            letters.append("D")
            x += 1
        elif d == 0 and spec.flat == 1:
            letters.append("H")
            x += 1
        elif d == 0:
            run = 0
            while x + run < w and profile[x + run + 1] == profile[x]:
                run += 1
            if run % 2:
                raise ClosureViolation(f"odd flat run of length {run} at abscissa {x} in {profile}")
            letters.append("H" * (run // 2))
            x += run
        else:
            raise ClosureViolation(f"jump of {d} at abscissa {x} in {profile}")
    path = PathWord("".join(letters), spec.flat)
    ok, why = validate(spec, path)
    if not ok:
        raise ClosureViolation(f"profile {profile} re-encodes to {path}, not a {spec.name} path: {why}")
    return path


def _pointwise(a: PathWord, b: PathWord, spec, pick) -> PathWord:
    spec = get_class(spec)
    if not spec.is_lattice:
        raise ValueError(f"{spec.name} posets are not lattices; meet/join are not offered")
    ha, hb = heights(a), heights(b)
    if len(ha) != len(hb):
        raise ValueError(f"paths of different widths: {a} vs {b}")
    return _encode([pick(x, y) for x, y in zip(ha, hb)], spec)


def meet(a: PathWord, b: PathWord, spec) -> PathWord:
    """Greatest lower bound: the pointwise minimum of the height profiles."""
    return _pointwise(a, b, spec, min)


def join(a: PathWord, b: PathWord, spec) -> PathWord:
    """Least upper bound: the pointwise maximum of the height profiles."""
    return _pointwise(a, b, spec, max)


# --- summaries and export -------------------------------------------------------------

@dataclass(frozen=True)
class HasseSummary:
    cls: str
    n: int
    vertices: int
    edges: int
    route: str

    @property
    def index(self) -> Fraction:
        return Fraction(self.edges, self.vertices)


def hasse_summary(spec, n: int, route: str = "auto") -> HasseSummary:
    """Vertices, edges and Hasse index of ``P_n``.

    ``route="auto"`` enumerates when ``n`` is within the enumeration cap and
    falls back to the closed forms otherwise.
    """
    spec = get_class(spec)
    if route == "auto":
        route = "enum" if n <= ENUM_CAPS[spec.name] else "formula"
    if route == "enum":
        check_cap(spec, n, "enum")
        vertices = edges = 0
        terms = _DELTA_TERMS[spec.name]
        for p in iter_class(spec, n):
            vertices += 1
            edges += _statistic(p, terms)
    elif route == "formula":
        vertices = closedforms.vertex_count(spec, n)
        edges = closedforms.edge_count_formula(spec, n)
    else:
        raise ValueError(f"unknown route {route!r}")
    return HasseSummary(spec.name, n, vertices, edges, route)


def edges_to_csv(edges: Iterable[tuple[PathWord, PathWord]]) -> str:
    """Edge list as CSV with a ``lower,upper`` header, rows sorted."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lower", "upper"])
    for lo, hi in sorted(edges, key=lambda e: (str(e[0]), str(e[1]))):
        writer.writerow([str(lo), str(hi)])
    return buf.getvalue()


def edges_to_adjacency_json(edges: Iterable[tuple[PathWord, PathWord]], vertices=()) -> str:
    """Upward adjacency map ``{path: [covering paths]}`` as JSON."""
    adj: dict[str, list[str]] = {str(v): [] for v in vertices}
    for lo, hi in edges:
        adj.setdefault(str(lo), []).append(str(hi))
        adj.setdefault(str(hi), [])
    return json.dumps({k: sorted(v) for k, v in sorted(adj.items())}, indent=2)
