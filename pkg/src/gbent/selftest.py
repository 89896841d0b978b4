"""Quick invariant suite used by the ``selftest`` command.

Each suite returns (passed, total).  Random inputs come from a fixed seed so
that two runs report the same counts.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import analysis as A
from . import constructions as C
from . import rds as R
from .cyclotomic import (CycloParams, digit_identity_check, gamma, gamma_inversion_check,
                         gamma_product, gauss_sum)
from .func import GBFunc
from .transform import inverse_check, wht_fast, wht_naive

SEED = 20240601


def _random_func(rng, p, l, n, k) -> GBFunc:
    return GBFunc(p, l, n, k, rng.integers(0, p ** k, size=p ** (l * n)))


def cyclotomic_identities():
    passed = total = 0
    for p, t, k in [(3, 1, 2), (3, 1, 3), (3, 2, 3), (5, 1, 2)]:
        params = CycloParams(p, k)
        for a in range(p ** t):
            total += 1
            passed += digit_identity_check(a, t, params)
    for p, t, l, k in [(3, 1, 2, 2), (3, 1, 3, 3), (5, 1, 2, 2)]:
        params = CycloParams(p, k)
        for c in itertools.product(range(p ** t), repeat=l - 1):
            total += 2
            passed += gamma(c, t, params) == gamma_product(c, t, params)
            passed += gamma_inversion_check(c, t, params)
    for p in (3, 5, 7):
        g = gauss_sum(CycloParams(p, 1))
        total += 1
        passed += g * g == (-1) ** ((p - 1) // 2) * p
    return passed, total


def fast_vs_naive(count: int = 24):
    rng = np.random.default_rng(SEED)
    shapes = [(3, 1, 2, 2), (3, 2, 2, 3), (5, 1, 2, 2), (3, 1, 3, 1), (3, 2, 1, 2), (7, 1, 2, 1)]
    passed = total = 0
    for i in range(count):
        f = _random_func(rng, *shapes[i % len(shapes)])
        fast = wht_fast(f)
        total += 1
        passed += bool(fast == wht_naive(f) and inverse_check(f, fast))
    return passed, total


def zpk_bent_agreement(count: int = 20):
    """Definition path vs. multiples-of-p path for Z_{p^k}-bentness."""
    rng = np.random.default_rng(SEED + 1)
    spread = C.regular_spread(C.gf_make(3, 2))
    funcs = [C.spread_gbent(spread, C.default_balanced_map(3, 2, k)) for k in (1, 2)]
    funcs.append(C.lift_bent(GBFunc.from_callable(3, 1, 2, 1, lambda x: x[0] * x[1]), 2))
    funcs += [_random_func(rng, 3, 1, 2, 2) for _ in range(count)]
    passed = sum(bool(A.is_zpk_bent_definition(f)) == bool(A.is_zpk_bent_proposition(f)) for f in funcs)
    return passed, len(funcs)


def rds_agreement(count: int = 20):
    """Difference counting vs. character sums on random subsets and graphs."""
    rng = np.random.default_rng(SEED + 2)
    group = R.GroupSpec(3, 2, 2)
    subsets = []
    for _ in range(count):
        codes = rng.choice(group.order, size=9, replace=False)
        subsets.append(R.SubsetR(group, [(c // 9, c % 9) for c in codes]))
    spread = C.regular_spread(C.gf_make(3, 2))
    subsets.append(R.graph_of(C.spread_gbent(spread, C.default_balanced_map(3, 2, 2))))
    subsets.append(R.graph_of(C.lift_bent(GBFunc.from_callable(3, 1, 2, 1, lambda x: x[0] * x[1]), 2)))
    passed = 0
    for sub in subsets:
        g = sub.group
        lam = len(sub) * (len(sub) - 1) // (g.order - g.forbidden_order)
        params = (g.order // g.forbidden_order, g.forbidden_order, len(sub), lam)
        passed += bool(R.rds_bruteforce(sub, params)) == bool(R.rds_characters(sub, lam))
    return passed, len(subsets)


SUITES = {
    "cyclotomic_identities": cyclotomic_identities,
    "fast_vs_naive": fast_vs_naive,
    "zpk_bent_agreement": zpk_bent_agreement,
    "rds_agreement": rds_agreement,
}


def run_all() -> dict:
    return {name: suite() for name, suite in SUITES.items()}
