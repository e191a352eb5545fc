#!/usr/bin/env python3
"""Degree thresholds for k disjoint distinct-length cycles, and the
instances showing each one is exact.

Every threshold value printed here is backed by a pair of checks: the
brute-force oracle proves absence one vertex below the bound, and the
constructive finder produces a verified packing at the bound.
"""

from cyclepack.extremal import claim_ids, tightness_check
from cyclepack.packing import (
    even_degree_threshold,
    plain_degree_threshold,
    residue_system_degree_threshold,
    triangle_free_degree_threshold,
)

print("minimum-degree thresholds")
print(" k   plain   triangle-free   even-length")
for k in range(1, 6):
    print(
        f"{k:2d}  {plain_degree_threshold(k):6d}  "
        f"{triangle_free_degree_threshold(k):14d}  {even_degree_threshold(k):12d}"
    )
print()
print("residue systems: modulus r needs min degree", end=" ")
print(", ".join(f"{r}->{residue_system_degree_threshold(r)}" for r in (3, 5, 7)))
print()

for claim in claim_ids():
    result = tightness_check(claim)
    print(f"[{claim}]")
    for line in result.transcript:
        print("  " + line)
    print("  =>", "tight" if result.passed else "NOT CONFIRMED")
    print()
