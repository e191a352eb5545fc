#!/usr/bin/env python3
"""How the constructive finders work: peel off one degree class, recurse,
then pick a fresh cycle length from the other class.

Shown on the three tight instances where the partition is forced, so the
intermediate objects are easy to read.
"""

from cyclepack.extremal import complete_bipartite, complete_graph
from cyclepack.packing import (
    find_disjoint_distinct,
    find_disjoint_distinct_trianglefree,
    find_disjoint_even_distinct,
    find_residue_system,
)
from cyclepack.partition import degree_partition

g = complete_graph(12)
part = degree_partition(g, 6, 4)
print("K12 split for k=3: class sizes", [len(c) for c in part.classes])
p = find_disjoint_distinct(g, 3)
print("  packing lengths:", p.lengths())
for c in p.cycles:
    print("   ", c.vertices)
print()

b = complete_bipartite(5, 5)
p = find_disjoint_distinct_trianglefree(b, 2)
print("K(5,5), triangle-free route, k=2:", p.lengths())
print()

k10 = complete_graph(10)
p = find_disjoint_even_distinct(k10, 2)
print("K10, even lengths only, k=2:", p.lengths())
print()

k18 = complete_graph(18)
p = find_residue_system(k18, 3)
print("K18, one length per residue class mod 3:", p.lengths())
print("  residues:", [l % 3 for l in p.lengths()])
