"""Walkthrough: cordial labelings of trees over the Klein four-group.

Every tree has one, except the paths on 4 and 5 vertices.  Run:
python demos/tree_labeling_demo.py
"""

from cordial import (
    KLEIN,
    free_trees,
    is_cordial,
    label_tree_z22,
    path,
    random_tree,
    star,
    verify_trees,
)
from cordial.graphs import labeling_to_dot
from cordial.groups import format_element

# ---------------------------------------------------------------------------
# The two exceptional paths, and the smallest interesting success
# ---------------------------------------------------------------------------
for n in (4, 5, 6):
    print(f"P{n}: {label_tree_z22(path(n)).status}")

result = label_tree_z22(star(3))
labels = [format_element(KLEIN, el) for el in result.labeling.vertex_labels]
print(f"S3: {result.status}, labels {labels}")
print()

# ---------------------------------------------------------------------------
# All 23 trees on 8 vertices, with their frequency profiles
# ---------------------------------------------------------------------------
print("8-vertex trees (vertex profile | edge profile):")
for i, tree in enumerate(free_trees(8)):
    labeling = label_tree_z22(tree).labeling
    report = is_cordial(labeling)
    f_v = [c for _, c in report.f_V.counts]
    f_e = [c for _, c in report.f_E.counts]
    print(f"  tree {i + 1:>2}: {f_v} | {f_e}")
print()

# ---------------------------------------------------------------------------
# A large random tree goes through the strip / peel-4 / rebuild pipeline
# ---------------------------------------------------------------------------
big = random_tree(61, seed=42)
result = label_tree_z22(big)
print(f"random 61-vertex tree: {result.status}")
print("edge profile:", [c for _, c in is_cordial(result.labeling).f_E.counts])
print()

# ---------------------------------------------------------------------------
# Desk-scale verification: every tree up to 10 vertices, oracle-confirmed to 9
# ---------------------------------------------------------------------------
report = verify_trees(10, oracle_n_max=9)
print(report.to_table())
print()

dot = labeling_to_dot(label_tree_z22(star(3)).labeling)
with open("s3.dot", "w", encoding="utf-8") as fh:
    fh.write(dot + "\n")
print("labeled S3 written to s3.dot")
