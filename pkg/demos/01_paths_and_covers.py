"""
Paths, factor statistics and covers
===================================

Enumerate a small Motzkin lattice, count covers with factor statistics and
check them against local rewrites.
"""

from hassepaths import (
    covered_by_rewrite,
    covers_by_rewrite,
    delta_count,
    enumerate_class,
    nabla_count,
    occurrences,
    occurrences_off_axis,
)

paths = enumerate_class("MM", 4)
print(f"MM_4 has {len(paths)} paths")
print(f"{'path':6} {'up':>3} {'down':>4}  covered by")
for p in paths:
    up = sorted(str(c) for c in covers_by_rewrite(p, "MM"))
    assert len(up) == delta_count(p, "MM")
    assert len(covered_by_rewrite(p, "MM")) == nabla_count(p, "MM")
    print(f"{str(p):6} {delta_count(p, 'MM'):>3} {nabla_count(p, 'MM'):>4}  {', '.join(up)}")

# the down count of a Dyck path only sees peaks away from the axis
p = enumerate_class("DD", 4)[5]
print(f"\nDyck path {p}: UD occurs {occurrences(p, 'UD')} times, {occurrences_off_axis(p, 'UD')} off the axis")
