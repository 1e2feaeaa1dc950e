"""
Four routes, one number
=======================

Run the same sweep the ``hassepaths verify`` command does, by hand.
"""

from hassepaths import (
    CLASSES,
    coefficient,
    delta_nabla_totals,
    edge_count_formula,
    edge_series_closed,
    hasse_summary,
)

print(f"{'class':5} {'n':>2} {'enum':>8} {'series':>8} {'formula':>8}")
for cls in CLASSES:
    n = 6
    up, down = delta_nabla_totals(cls, n)
    assert up == down
    s = coefficient(edge_series_closed(cls, n), n)
    print(f"{cls:5} {n:>2} {up:>8} {int(s):>8} {edge_count_formula(cls, n):>8}")

print()
for cls in ("DD", "GS"):
    summary = hasse_summary(cls, 5)
    print(f"{cls}_5: {summary.vertices} vertices, {summary.edges} edges, index {summary.index}")
