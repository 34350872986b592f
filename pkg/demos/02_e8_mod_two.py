"""The 256 classes of E8/2E8 and how vectors of a fixed norm spread over them.

    python demos/02_e8_mod_two.py
"""

import numpy as np

from severi_lab import e8

roots = e8.roots()
print(f"{len(roots)} roots; first three in canonical order:")
for r in roots[:3]:
    print("   ", r)

counts = e8.classify_classes()
print(f"classes by minimal norm: zero {counts.zero}, root {counts.root}, norm4 {counts.norm4}")

# Within a parity type every class holds the same number of vectors.
table = e8.norm_class_table(24)
parity = np.array([e8.class_id(v).parity for v in (e8.class_representatives()[b] for b in range(256))])
print("\nnorm   zero  per-root-class  per-norm4-class")
for k in range(1, 13):
    row = table[k]
    root_vals = set(row[parity == e8.ROOT].tolist())
    n4_vals = set(row[parity == e8.NORM4].tolist())
    print(f"{2 * k:4d} {row[0]:6d} {sorted(root_vals)!s:>15} {sorted(n4_vals)!s:>16}")

# Splitting w = u1 + u2 with a prescribed u1.u2 is a class count in disguise.
w = e8.E8Vector((2, 2, 0, 0, 0, 0, 0, 0))
print("\npairs summing to a root with m = 3:", e8.count_pair_decompositions(w, 3))
print("same by scanning candidates      :", e8.count_pair_decompositions_direct(w, 3))
