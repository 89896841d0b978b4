"""Duals from p-ary components, and plateaued Gray images."""
from gbent import GBFunc, classify_and_dual, gray_image, plateaued_order, verify_dual_formula
from gbent.analysis import verify_gray_plateaued

f = GBFunc.from_callable(3, 1, 2, 3, lambda x: 9 * x[0] * x[1] + 3 * x[1] ** 2)
cls, cert = classify_and_dual(f)
print("class:", cls.kind, " signs:", set(cert.signs.tolist()))
print("dual:", cert.dual.table)
print("dual rebuilt from digit duals:", verify_dual_formula(f))

G = gray_image(f)
info = plateaued_order(G)
print(f"Gray image on {G.n} variables is {info.s}-plateaued; same exponent for all u: {info.uniform}")
print("matches k - 1:", bool(verify_gray_plateaued(f)))
