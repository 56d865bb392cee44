"""Walkthrough: cordial labelings of friendship graphs F_n over Z_m.

F_n is n triangles glued at one center.  The toolkit combines closed-form
constructions (uniform blocks, disjoint-pair prefixes, append tables, a
rescaled extension, a shift-based scheme for 3 | m), a parity obstruction,
and an exhaustive oracle.  Run:  python demos/friendship_demo.py
"""

from cordial import (
    label_friendship,
    mad_construction,
    obstruction,
    uniform_block_odd,
    verify_friendship_conjecture,
)

# ---------------------------------------------------------------------------
# A uniform block: the addable unit that extends any labeling by m triangles
# ---------------------------------------------------------------------------
block = uniform_block_odd(7)
print("F_7 over Z_7 block:", block.triangles)
report = block.verify()
print("cordial:", report.cordial, "| edge profile:", [c for _, c in report.f_E.counts])
print()

# ---------------------------------------------------------------------------
# Disjoint pairs give F_j for j up to floor(m/3) with no label reused at all
# ---------------------------------------------------------------------------
lab = mad_construction(31, 10)
print("F_10 over Z_31 triangles:", lab.triangles)
print("cordial:", lab.verify().cordial)
print()

# ---------------------------------------------------------------------------
# The parity obstruction, and the dispatcher routing each n to a method
# ---------------------------------------------------------------------------
print("Z_6: obstructed n:", [n for n in range(25) if obstruction(6, n)])
print()
print("Z_9 routing (block size 9):")
for n in [2, 4, 6, 8, 16, 26]:
    result = label_friendship(9, n)
    print(f"  F_{n:>2}: {result.status} via {result.method}")
print()
print("Z_5 needs the oracle for the gap above floor(2m/3):")
for n in [1, 2, 3, 4, 13]:
    result = label_friendship(5, n)
    print(f"  F_{n:>2}: {result.status} via {result.method}")
print()

# ---------------------------------------------------------------------------
# The desk-scale grid: obstruction exactly matches oracle infeasibility
# ---------------------------------------------------------------------------
report = verify_friendship_conjecture(6, 6, budget=40_000_000)
print(report.to_table())
