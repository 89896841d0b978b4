"""Exact arithmetic with roots of unity.

Elements of Z[zeta_9] are stored as integer vectors on the basis
1, zeta, ..., zeta^5; higher powers are folded back with zeta^6 = -zeta^3 - 1.
"""
from gbent.cyclotomic import CycInt, CycloParams, gauss_sum, reduce, unit_match

R = CycloParams(3, 2)
print("ring Z[zeta_9], basis size", R.degree)

z = CycInt.root(R, 1)
print("zeta^8 =", reduce(8, R))
print("zeta * zeta^8 =", z * reduce(8, R))

# every Walsh coefficient lives here, so |S|^2 is again an element of the ring
s = 1 + z + z ** 2
print("|1 + zeta + zeta^2|^2 =", s.norm_sq())

# the Gauss sum stands in for sqrt(-3)
g = gauss_sum(R)
print("g_3 =", g, " g_3^2 =", g * g)

# recognizing +-3 g_3 zeta^e shapes exactly
value = -3 * g * z ** 2
print("shape of -3 g_3 zeta^2:", unit_match(value, 1, True, R))
print("shape of 3 (1 + zeta):", unit_match(3 * (1 + z), 1, False, R))
