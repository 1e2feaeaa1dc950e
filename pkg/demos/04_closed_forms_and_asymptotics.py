"""
Closed forms, Hasse index and growth
====================================

Evaluate the identities far beyond enumeration range and compare with the
leading-order estimates.
"""

from hassepaths import (
    ASYMPTOTIC_QUANTITIES,
    asymptotic_report,
    classification_report,
    edge_count_identities,
    hasse_index_exact,
    report_table,
)

print("Motzkin identities at n = 40:")
for name, value in edge_count_identities("MM", 40).items():
    print(f"  {name:18} {value}")

print("\nexact / estimate at n = 300")
for q in ASYMPTOTIC_QUANTITIES:
    rep = asymptotic_report(q, 300)
    print(f"  {q:18} {rep.ratio:.5f}")

print()
print(report_table(classification_report(c) for c in ("DD", "GD", "MM", "GM", "SS", "GS", "FF", "GF")))

for n in (20, 80, 320):
    r = hasse_index_exact("FF", n) / hasse_index_exact("GF", n)
    print(f"i(FF_{n}) / i(GF_{n}) = {float(r):.4f}")
