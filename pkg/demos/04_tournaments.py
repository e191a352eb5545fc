#!/usr/bin/env python3
"""Tournament routines: Hamiltonian cycles in strong tournaments, long
cycles from the out-degree, shortening ladders, and disjoint pairs."""

from cyclepack.dicycles import (
    Tournament,
    camion_hamiltonian,
    tournament_cycle_shorten,
    tournament_disjoint_distinct,
    tournament_long_cycle,
)
from cyclepack.extremal import random_tournament, rotational_tournament

t = rotational_tournament(9)
ham = camion_hamiltonian(t)
print("rotational tournament on 9: Hamiltonian cycle", ham.vertices)

print("shortening ladder:", end=" ")
for target in range(8, 2, -1):
    c = tournament_cycle_shorten(t, ham, target)
    print(c.length, end=" ")
print()
print()

# a random tournament is rarely strong from every vertex's view; the long
# cycle comes from its dominated strong component and still beats 2*delta+1
rt = random_tournament(12, seed=8)
delta = min(rt.out_degree(v) for v in range(12))
c = tournament_long_cycle(rt)
print(f"random tournament on 12: min out-degree {delta}, long cycle {c.length} "
      f"(guarantee {2 * delta + 1})")
print()

t11 = rotational_tournament(11)
p = tournament_disjoint_distinct(t11, 2)
print("rotational on 11, two disjoint distinct lengths:", p.lengths())
for c in p.cycles:
    print("  ", c.vertices)
