"""Deciding gbent-ness from the spectra of smaller component functions.

Each mode splits f into digit blocks and looks at Z_{p^t}-combinations of them.
f is gbent exactly when all component spectra share one sign, one j and one
vector d at every u.
"""
import numpy as np

from gbent import GBFunc, characterization_check, is_gbent
from gbent.analysis import legal_parameters

f = GBFunc.from_callable(3, 1, 2, 2, lambda x: 3 * x[0] * x[1] + x[0])
print("f gbent:", bool(is_gbent(f)))
for mode in "ABCD":
    for t, s in legal_parameters(f, mode):
        ok, cert = characterization_check(f, mode, t, s)
        print(f"mode {mode} t={t} s={s}: {ok}")

ok, cert = characterization_check(f, "C", 1)
entry = cert.entries[0]
print("certificate at u=0: j =", entry.j, "d =", entry.d, "signs =", entry.signs)

# disagreement would be a bug; check a batch of random inputs
rng = np.random.default_rng(1)
mismatch = 0
for _ in range(200):
    g = GBFunc(3, 1, 2, 2, rng.integers(0, 9, size=9))
    truth = bool(is_gbent(g))
    mismatch += any(characterization_check(g, m, *ts)[0] != truth
                    for m in "ABC" for ts in legal_parameters(g, m))
print("random mismatches:", mismatch)
