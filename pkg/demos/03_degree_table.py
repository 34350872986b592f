"""Conjectural degrees, telltale counts and the unconditional upper bounds.

    python demos/03_degree_table.py [g_max]
"""

import sys

from severi_lab import severi

g_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8

print(f"{'g':>3} {'type':>12} {'degree':>8} {'simple':>7} {'bound':>10} {'genus bound':>14}")
for row in severi.degree_table(g_max):
    print(
        f"{row.g:3d} {row.type:>12} {row.conjectural_degree:8d} {row.simple_telltales:7d}"
        f" {row.rigorous_degree_bound:10d} {row.genus_bound:14d}"
    )

# The genus 0 ordinary case: a quartic, with one telltale per singular fiber.
print("\ngenus 0 ordinary degree:", severi.conjectural_degree(0, severi.ORDINARY))
print("singular fibers        :", severi.simple_telltale_count(0, severi.ORDINARY))
