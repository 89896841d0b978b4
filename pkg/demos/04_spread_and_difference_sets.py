"""A Z_9-bent function on Z_3^4 from the regular spread of GF(9)^2.

Its graph is a (81, 9, 81, 9) relative difference set, and its two digits form
a vectorial bent function.
"""
from gbent import (default_balanced_map, digits, gf_make, graph_of, is_gbent, is_vectorial_bent,
                   is_zpk_bent, rds_bruteforce, rds_characters, regular_spread, spread_gbent)
from gbent.rds import graph_parameters

F = gf_make(3, 2)
print("GF(9) modulus coefficients (low first):", F.modulus)
S = regular_spread(F)
print("spread size:", len(S.subspaces), "valid:", S.verify())

f = spread_gbent(S, default_balanced_map(3, 2, 2))
print("gbent:", bool(is_gbent(f)))
print("Z_9-bent:", bool(is_zpk_bent(f)), bool(is_zpk_bent(f, "definition")))

R = graph_of(f)
params = graph_parameters(R.group)
print("parameters:", params)
print("difference counting:", bool(rds_bruteforce(R, params)))
print("character sums:", bool(rds_characters(R)))
print("digits vectorial bent:", bool(is_vectorial_bent(digits(f))))

# a gbent function that is not Z_9-bent gives no difference set
lift = f.with_table(3 * (f.table % 3))
print("lift gbent:", bool(is_gbent(lift)), " Z_9-bent:", bool(is_zpk_bent(lift)),
      " RDS:", bool(rds_characters(graph_of(lift))))
