"""Eisenstein series, the theta function and the derivative identity, exactly.

    python demos/01_quasimodular_series.py
"""

from fractions import Fraction

from severi_lab.qseries import e4_infinity, eisenstein, qs_derive, theta

N = 12
E2, E4, E6 = (eisenstein(k, N) for k in (2, 4, 6))

print("E2   ", [int(c) for c in E2])
print("E4   ", [int(c) for c in E4])
print("E6   ", [int(c) for c in E6])
print("theta", [int(c) for c in theta(N)])

# D = q d/dq raises weight by 2 but leaves the modular world; E2 repairs it.
lhs = qs_derive(E4)
rhs = (E2 * E4 - E6) * Fraction(1, 3)
print("D E4 == (E2 E4 - E6)/3 through q^%d:" % N, lhs == rhs)

# E4inf keeps sigma3 on odd n and sigma3(n) - sigma3(n/2) on even n.
print("E4inf", [int(c) for c in e4_infinity(N)])
