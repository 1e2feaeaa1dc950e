"""Integer partitions, Ferrers-diagram geometry and edge counts of Young lattices."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Union

from .order import CapExceeded, env_max_cells

__all__ = [
    "Partition",
    "parse_partition",
    "partitions_of",
    "rectangle",
    "staircase",
    "contains",
    "sub_partitions",
    "ideal_size",
    "corner_cells",
    "ne_partition",
    "sw_partition",
    "nw_partition",
    "se_partition",
    "young_edges",
    "young_edges_bruteforce",
    "rect_edges",
    "young_report",
    "DEFAULT_BRUTE_CAP",
]

DEFAULT_BRUTE_CAP = 200_000


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


PartitionLike = Union[Partition, tuple, list]


def _as_partition(p: PartitionLike) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def parse_partition(text: str) -> Partition:
    """Parse ``"12,10,10"``; the order is validated, never sorted."""
    text = text.strip()
    if not text or text == "-":
        return Partition()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: expected comma-separated positive integers") from None
    return Partition(parts)


def rectangle(m: int, n: int) -> Partition:
    """``m`` rows of length ``n``."""
    return Partition((n,) * m if n > 0 else ())


def staircase(k: int) -> Partition:
    """``(k, k-1, ..., 1)``."""
    return Partition(tuple(range(k, 0, -1)))


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, max_part):
        yield Partition(parts)


def contains(mu: PartitionLike, lam: PartitionLike) -> bool:
    """True if the diagram of ``mu`` fits inside the diagram of ``lam``."""
    mu, lam = _as_partition(mu), _as_partition(lam)
    return mu.length <= lam.length and all(a <= b for a, b in zip(mu.parts, lam.parts))


def sub_partitions(lam: PartitionLike) -> Iterator[Partition]:
    """Every partition contained in ``lam`` (the ideal ``Y_λ``)."""
    lam = _as_partition(lam)

    def gen(i, cap):
        yield ()
        if i >= lam.length:
            return
        for v in range(1, min(cap, lam.parts[i]) + 1):
            for tail in gen(i + 1, v):
                yield (v,) + tail

    for parts in gen(0, lam.width):
        yield Partition(parts)


def ideal_size(lam: PartitionLike) -> int:
    """``|Y_λ|``, by a row-by-row count over bounded decreasing sequences.

    ``ways[v]`` counts the admissible rows so far whose last value is ``v``
    (0 meaning the partition already ended); suffix sums give the next row.
    """
    lam = _as_partition(lam)
    if not lam.parts:
        return 1
    ways = [1] * (lam.parts[0] + 1)
    for bound in lam.parts[1:]:
        suffix = 0
        nxt = [0] * (bound + 1)
        for v in range(len(ways) - 1, -1, -1):
            suffix += ways[v]
            if v <= bound:
                nxt[v] = suffix
        ways = nxt
    return sum(ways)


def corner_cells(lam: PartitionLike) -> list[tuple[int, int]]:
    """Removable cells ``(i, λ_i)``, top to bottom."""
    lam = _as_partition(lam)
    p = lam.parts
    return [(i + 1, p[i]) for i in range(len(p)) if i + 1 == len(p) or p[i + 1] < p[i]]


def _check_cell(lam: Partition, cell) -> tuple[int, int]:
    i, j = cell
    if (i, j) not in lam:
        raise ValueError(f"cell {(i, j)} is not in the diagram of ({lam})")
    return i, j


def ne_partition(lam: PartitionLike, cell) -> Partition:
    """Cells strictly above row ``i`` and strictly right of column ``j``."""
    lam = _as_partition(lam)
    i, j = _check_cell(lam, cell)
    return Partition(tuple(p - j for p in lam.parts[: i - 1] if p > j))


def sw_partition(lam: PartitionLike, cell) -> Partition:
    """Cells strictly below row ``i`` and strictly left of column ``j``."""
    lam = _as_partition(lam)
    i, j = _check_cell(lam, cell)
    return Partition(tuple(v for v in (min(p, j - 1) for p in lam.parts[i:]) if v > 0))


def nw_partition(lam: PartitionLike, cell) -> Partition:
    """The first ``i`` rows cut to the first ``j`` columns: smallest μ with corner ``(i, j)``."""
    lam = _as_partition(lam)
    i, j = _check_cell(lam, cell)
    return Partition(tuple(min(p, j) for p in lam.parts[:i]))


def se_partition(lam: PartitionLike, cell) -> Partition:
    """``λ`` minus every other cell weakly south-east of ``(i, j)``: largest μ with corner ``(i, j)``."""
    lam = _as_partition(lam)
    i, j = _check_cell(lam, cell)
    parts = list(lam.parts[: i - 1]) + [j] + [min(p, j - 1) for p in lam.parts[i:]]
    return Partition(tuple(p for p in parts if p > 0))


def young_edges(lam: PartitionLike) -> int:
    """Edges of the Hasse diagram of ``Y_λ``.

    Each cell ``(i, j)`` contributes the number of ``μ ≤ λ`` having it as a
    corner, which factors as ``|Y_sw| * |Y_ne|``.
    """
    lam = _as_partition(lam)
    memo: dict[tuple[int, ...], int] = {}

    def size(p: Partition) -> int:
        v = memo.get(p.parts)
        if v is None:
            v = memo[p.parts] = ideal_size(p)
        return v

    return sum(size(sw_partition(lam, c)) * size(ne_partition(lam, c)) for c in lam.cells())


def young_edges_bruteforce(lam: PartitionLike, cap: Optional[int] = None) -> int:
    """Edges counted downward: every ``μ ≤ λ`` covers one partition per corner cell."""
    lam = _as_partition(lam)
    if cap is None:
        cap = max(DEFAULT_BRUTE_CAP, env_max_cells() or 0)
    if ideal_size(lam) > cap:
        raise CapExceeded(f"Y_({lam}) has more than {cap} elements")
    return sum(len(corner_cells(mu)) for mu in sub_partitions(lam))


def rect_edges(m: int, n: int) -> int:
    """Edges of ``L(m, n)``, the Young lattice of the ``m x n`` rectangle."""
    if m < 1 or n < 1:
        raise ValueError(f"rect_edges needs m, n >= 1, got {(m, n)}")
    return comb(m + n - 1, n) * n


def young_report(lam: PartitionLike) -> str:
    """JSON summary with big integers as decimal strings."""
    lam = _as_partition(lam)
    return json.dumps(
        {
            "partition": list(lam.parts),
            "ideal_size": str(ideal_size(lam)),
            "edges": str(young_edges(lam)),
            "corner_cells": [list(c) for c in corner_cells(lam)],
        }
    )
