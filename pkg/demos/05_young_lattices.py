"""
Young lattices
==============

Count Hasse edges of Y_λ with the corner-cell product and check the
path-lattice special cases.
"""

from hassepaths import (
    Partition,
    corner_cells,
    edge_count_formula,
    ideal_size,
    ne_partition,
    rect_edges,
    rectangle,
    staircase,
    sw_partition,
    young_edges,
    young_edges_bruteforce,
)

lam = Partition.of(12, 10, 10, 8, 6, 6, 6, 2, 1)
print(f"lambda = ({lam}), |Y| = {ideal_size(lam)}, corners {corner_cells(lam)}")
cell = (3, 5)
print(f"around {cell}: ne = ({ne_partition(lam, cell)}), sw = ({sw_partition(lam, cell)})")
print(f"edges: {young_edges(lam)} (brute force {young_edges_bruteforce(lam)})")

for n in range(1, 8):
    print(
        f"n={n}: square {young_edges(rectangle(n, n)):6} = l(GD) {edge_count_formula('GD', n):6};"
        f" staircase {young_edges(staircase(n - 1)):5} = l(DD) {edge_count_formula('DD', n):5}"
    )
print(f"L(30, 40) has {rect_edges(30, 40)} edges")
