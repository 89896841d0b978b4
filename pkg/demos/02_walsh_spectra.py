"""Walsh spectra of functions Z_p^n -> Z_{p^k}, and what gbent means for them."""
import numpy as np

from gbent import GBFunc, classify_and_dual, is_gbent, wht, wht_naive

# f(x) = 3 x1 x2 into Z_9: the lift of the bent function x1 x2
f = GBFunc.from_callable(3, 1, 2, 2, lambda x: 3 * x[0] * x[1])
S = wht(f)
print("fast and direct transforms agree:", S == wht_naive(f))
print("|S(u)|^2 constant part per u:", S.norm_sq()[:, 0])
print("gbent:", bool(is_gbent(f)))

cls, cert = classify_and_dual(f)
print("class:", cls.kind)
print("dual table:", cert.dual.table)

# a random function almost never has a flat spectrum
rng = np.random.default_rng(0)
g = GBFunc(3, 1, 2, 2, rng.integers(0, 9, size=9))
v = is_gbent(g)
print("random f gbent:", v.ok, "first bad u index:", v.witness)

# l > 1: inputs in Z_9, values in Z_27
h = GBFunc.from_callable(3, 2, 1, 3, lambda x: 3 * x[0] ** 2)
print("3x^2 on Z_9 -> Z_27 gbent:", bool(is_gbent(h)))
