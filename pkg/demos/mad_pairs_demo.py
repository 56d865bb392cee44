"""Walkthrough: additively disjoint pair families in Z_m.

A family of pairs (a_i, b_i) is additively disjoint when the entries and the
sums are all distinct group elements.  Z_m holds floor(m/3) of them, except
one fewer when m = 6 mod 12.  Run:  python demos/mad_pairs_demo.py
"""

from cordial import (
    family_search,
    mad_pairs,
    verify_additively_disjoint,
)
from cordial.mad import family_to_dot

# ---------------------------------------------------------------------------
# The flagship example: m = 31
# ---------------------------------------------------------------------------
family = mad_pairs(31)
print(f"Z_31 (case {family.case}): {len(family.pairs)} pairs, mu = {family.mu}")
for p in family.pairs:
    print(f"  ({p.a:>3}, {p.b:>3})  sum {p.sum:>3}")
print("sums:", sorted(p.sum for p in family.pairs))
print("disjoint:", verify_additively_disjoint(family.as_pairs(), 31).ok)
print()

# ---------------------------------------------------------------------------
# The count law across many moduli
# ---------------------------------------------------------------------------
print("m, family size, floor(m/3):")
for m in [6, 12, 18, 24, 30, 31, 100, 299]:
    fam = mad_pairs(m)
    marker = "  <- one short (m = 6 mod 12)" if m % 12 == 6 else ""
    print(f"  m={m:>3}: {len(fam.pairs):>3} of mu={m // 3}{marker}")
print()

# ---------------------------------------------------------------------------
# The converse, by independent search: for m = 6 and 18 no family of the
# full size mu exists, while mu - 1 is achievable.
# ---------------------------------------------------------------------------
for m in (6, 18):
    full = family_search(m, m // 3, use_counting_certificate=False)
    down = family_search(m, m // 3 - 1, use_counting_certificate=False)
    print(
        f"m={m}: size {m // 3} -> {full.status} ({full.nodes} nodes), "
        f"size {m // 3 - 1} -> {down.status}"
    )
print()

# For m = 30 blind exhaustion is hopeless, but a counting certificate from the
# candidate-triple table settles it instantly.
res = family_search(30, 10)
print(f"m=30 size 10 -> {res.status}")
print(f"certificate: {res.certificate}")
print()

# ---------------------------------------------------------------------------
# Chord diagram (render with `neato -Tpng`)
# ---------------------------------------------------------------------------
dot = family_to_dot(mad_pairs(13))
print("chord diagram for Z_13 written to mad13.dot")
with open("mad13.dot", "w", encoding="utf-8") as fh:
    fh.write(dot + "\n")
