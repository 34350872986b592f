"""Height sums: one section-series coefficient equals a weighted sum of degrees.

    python demos/04_height_sums.py
"""

from severi_lab import severi

for n in range(4):
    total = severi.height_degree_total(n)
    terms = severi.height_sum_terms(n)
    pieces = " + ".join(f"{c}*{d}" for _, _, c, d in terms if d)
    ok = severi.height_degree_sum_check(n).passed
    print(f"n={n}: {total} = {pieces}  [{'ok' if ok else 'MISMATCH'}]")

res = severi.growth_constant(40)
print(f"\nbound(g) <= {res['C_deg']} g^6 for 1 <= g <= 40, "
      f"so genus_bound(g) <= {float(res['C']):.1f} g^12 there: {res['holds']}")
