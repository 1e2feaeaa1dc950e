"""
Exact generating series
=======================

Expand the base counting series from their radicals, then get the edge series
of each family two ways.
"""

from fractions import Fraction

from hassepaths import (
    BASE_SERIES,
    TruncatedSeries,
    base_series,
    catalog_delta_series,
    edge_series_closed,
    edge_series_via_delta,
)

for name in BASE_SERIES:
    print(f"{name}: {[int(c) for c in base_series(name, 9)]}")

# rational arithmetic stays exact
s = TruncatedSeries([1, Fraction(1, 3), Fraction(-2, 7), 5], 3)
print(f"\nsqrt(s)^2 == s: {s.sqrt() ** 2 == s}")

delta = catalog_delta_series("GM", 4)
for n, row in enumerate(delta):
    print(f"GM_{n} cover polynomial: {row}")

for cls in ("MM", "GS", "GF"):
    a = [int(c) for c in edge_series_closed(cls, 10)]
    b = [int(c) for c in edge_series_via_delta(cls, 10)]
    print(f"{cls}: {a}  (via d/dq at q=1 agrees: {a == b})")
