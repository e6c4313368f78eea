#!/usr/bin/env python3
"""Count the inverse semigroups of small order, with full breakdowns.

Each cell of the breakdown reads X//Y: X structures over Y contributing
semilattices, split by idempotent count and the block-size shape of the
D-relation on the idempotents.
"""

import time

from isgenum import breakdown_csv, enumerate_counts_only

print(" n   inverse sgs   commutative   monoids   comm. monoids   time")
for n in range(1, 9):
    t0 = time.perf_counter()
    ledger = enumerate_counts_only(n)
    dt = time.perf_counter() - t0
    isgs, comm, ims, cims = ledger.totals()
    print(f"{n:>2}  {isgs:>11}  {comm:>12}  {ims:>8}  {cims:>14}   {dt:5.2f}s")

print("\nbreakdown for n = 6 (isgs//semilattices, monoids//lattices):")
ledger = enumerate_counts_only(6)
for (m, shape), vals in ledger.sorted_cells():
    shape_txt = ",".join(map(str, shape))
    print(
        f"  |E|={m} shape ({shape_txt}): {vals[0]}//{vals[4]} isgs,"
        f" {vals[2]}//{vals[5]} monoids"
    )

print("\nthe same data as CSV:")
print(breakdown_csv(ledger, 6))
