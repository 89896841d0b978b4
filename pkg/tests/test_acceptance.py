"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Under pytest the lines are repeated in an "acceptance criteria" section of
the terminal summary; ``python3 tests/test_acceptance.py`` prints them directly.
"""
import itertools
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gbent.analysis import (characterization_check, is_gbent, is_vectorial_bent,
                            is_zpk_bent_definition, is_zpk_bent_proposition, legal_parameters,
                            verify_dual_formula, verify_gray_plateaued)
from gbent.constructions import (default_balanced_map, gf_make, lift_bent, quadratic_gbent_lk,
                                 regular_spread, spread_gbent)
from gbent.cyclotomic import (CycloParams, digit_identity_check, gamma, gamma_inversion_check,
                              gamma_product, gauss_sum)
from gbent.func import GBFunc, digits
from gbent.rds import GroupSpec, SubsetR, graph_of, rds_bruteforce, rds_characters
from gbent.transform import inverse_check, wht_fast, wht_naive

import oracles
import witnesses

SEED = 2024
LINES = []  # collected for the terminal summary in conftest.py
XY = GBFunc.from_callable(3, 1, 2, 1, lambda x: x[0] * x[1])


def report(number, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.1f}s, limit {limit}s)"
    if detail:
        line += f" {detail}"
    LINES.append(line)
    print(line, flush=True)
    return status == "PASS"


def spread_function(k=2):
    return spread_gbent(regular_spread(gf_make(3, 2)), default_balanced_map(3, 2, k))


def criterion_1():
    start = time.perf_counter()
    checks = []
    for p, t, k in [(3, 1, 2), (3, 1, 3), (3, 2, 3), (5, 1, 2)]:
        params = CycloParams(p, k)
        checks += [digit_identity_check(a, t, params) for a in range(p ** t)]
    for p, t, l, k in [(3, 1, 2, 2), (3, 1, 3, 3), (5, 1, 2, 2)]:
        params = CycloParams(p, k)
        for c in itertools.product(range(p ** t), repeat=l - 1):
            checks.append(gamma(c, t, params) == gamma_product(c, t, params))
            checks.append(gamma_inversion_check(c, t, params))
    for p in (3, 5, 7):
        g = gauss_sum(CycloParams(p, 1))
        checks.append(g * g == (-1) ** ((p - 1) // 2) * p)
    return report(1, "cyclotomic identity suite", all(checks), time.perf_counter() - start, 10,
                  f"{sum(checks)}/{len(checks)} identities")


def transform_shapes():
    shapes = []
    for p, l, n, k in itertools.product((3, 5), (1, 2), range(1, 5), range(1, 4)):
        if l <= k and p ** (l * n) <= 729:
            shapes.append((p, l, n, k))
    return shapes


def criterion_2(count=240):
    start = time.perf_counter()
    rng = np.random.default_rng(SEED)
    shapes = transform_shapes()
    good = 0
    for i in range(count):
        p, l, n, k = shapes[i % len(shapes)]
        f = GBFunc(p, l, n, k, oracles.random_table(rng, p, l, n, k))
        fast = wht_fast(f)
        good += bool(fast == wht_naive(f) and inverse_check(f, fast))
    return report(2, "wht_fast == wht_naive and inverse identity", good == count,
                  time.perf_counter() - start, 120, f"{good}/{count} functions over {len(shapes)} shapes")


def criterion_3():
    start = time.perf_counter()
    f = spread_function()
    R = graph_of(f)
    results = {
        "gbent": bool(is_gbent(f)),
        "zpk_definition": bool(is_zpk_bent_definition(f)),
        "zpk_multiples": bool(is_zpk_bent_proposition(f)),
        "rds_bruteforce": bool(rds_bruteforce(R, (81, 9, 81, 9))),
        "rds_characters": bool(rds_characters(R, 9)),
        "vectorial_bent": bool(is_vectorial_bent(digits(f))),
        "dual_formula": verify_dual_formula(f),
    }
    gray = verify_gray_plateaued(f)
    results["gray_1_plateaued"] = bool(gray) and gray.witness == 1
    failed = [k for k, v in results.items() if not v]
    return report(3, "spread pipeline at (3,2,2)", not failed, time.perf_counter() - start, 300,
                  "failed: " + ", ".join(failed) if failed else "all 8 checks")


def _modes_agree(f, modes="ABC"):
    truth = bool(is_gbent(f))
    for mode in modes:
        for t, s in legal_parameters(f, mode):
            if characterization_check(f, mode, t, s)[0] != truth:
                return False, truth
    return True, truth


def criterion_4(random_count=1000):
    start = time.perf_counter()
    rng = np.random.default_rng(SEED + 4)
    suites = {}
    # lifts of all 27 p-ary functions on Z_3
    suites["lifts on Z_3"] = [lift_bent(GBFunc(3, 1, 1, 1, t), 2) for t in itertools.product(range(3), repeat=3)]
    # lifts of all 3^9 p-ary functions on Z_3^2
    suites["lifts on Z_3^2"] = [lift_bent(GBFunc(3, 1, 2, 1, t), 2) for t in itertools.product(range(3), repeat=9)]
    suites["random"] = [GBFunc(3, 1, 2, 2, oracles.random_table(rng, 3, 1, 2, 2)) for _ in range(random_count)]
    tagged = witnesses.affine_plus_bent()
    oracle_ok = all(bool(is_gbent(f)) == ok for f, ok in tagged)
    suites["affine + 3 bent"] = [f for f, _ in tagged]
    suites["spread"] = [spread_function()]
    summary = []
    all_ok = oracle_ok
    for name, funcs in suites.items():
        agree = positives = 0
        for f in funcs:
            ok, truth = _modes_agree(f)
            agree += ok
            positives += truth
        all_ok &= agree == len(funcs)
        summary.append(f"{name} {agree}/{len(funcs)} ({positives} gbent)")
    return report(4, "modes A/B/C agree with is_gbent", all_ok, time.perf_counter() - start, 600,
                  "; ".join(summary))


def criterion_5(random_count=200):
    start = time.perf_counter()
    rng = np.random.default_rng(SEED + 5)
    q = quadratic_gbent_lk(3, 2, 3, 1)
    witness_ok = (oracles.is_gbent_complex(3, 2, 1, 3, q.table) and bool(is_gbent(q))
                  and bool(is_gbent(q)) == bool(characterization_check(q, "D")[0]))
    funcs = [GBFunc(3, 2, 1, 3, oracles.random_table(rng, 3, 2, 1, 3)) for _ in range(random_count)]
    # quadratic variants 3(a x^2 + b x) + c give a mix of gbent and non-gbent inputs
    funcs += [GBFunc.from_callable(3, 2, 1, 3, lambda x, a=a, b=b, c=c: 3 * (a * x[0] ** 2 + b * x[0]) + c)
              for a in range(9) for b in range(9) for c in (0, 1, 13)]
    agree = positives = 0
    for f in funcs:
        ok, truth = _modes_agree(f, "D")
        agree += ok
        positives += truth
    return report(5, "mode D on Z_9 -> Z_27", witness_ok and agree == len(funcs),
                  time.perf_counter() - start, 120,
                  f"witness {'ok' if witness_ok else 'FAILED'}; {agree}/{len(funcs)} agree ({positives} gbent)")


def criterion_6():
    start = time.perf_counter()
    zero = GBFunc.zero(3, 1, 2, 2)
    lift = lift_bent(XY, 2)
    R = graph_of(lift)
    checks = {
        "zero not gbent": not is_gbent(zero),
        "lift gbent": bool(is_gbent(lift)),
        "lift not zpk (definition)": not is_zpk_bent_definition(lift),
        "lift not zpk (multiples)": not is_zpk_bent_proposition(lift),
        "lift graph fails bruteforce": not rds_bruteforce(R, (9, 9, 9, 1)),
        "lift graph fails characters": not rds_characters(R, 1),
    }
    failed = [k for k, v in checks.items() if not v]
    return report(6, "negative controls", not failed, time.perf_counter() - start, 30,
                  "failed: " + ", ".join(failed) if failed else "all 6 checks")


def criterion_7(random_count=60):
    start = time.perf_counter()
    rng = np.random.default_rng(SEED + 7)
    group = GroupSpec(3, 2, 2)
    cases = []
    for _ in range(random_count):
        codes = rng.choice(group.order, size=9, replace=False)
        cases.append((SubsetR(group, [(c // 9, c % 9) for c in codes]), (9, 9, 9, 1)))
    cases.append((graph_of(spread_function(2)), (81, 9, 81, 9)))
    cases.append((graph_of(spread_function(1)), (81, 3, 81, 27)))
    cases.append((graph_of(XY), (9, 3, 9, 3)))
    cases.append((graph_of(lift_bent(XY, 2)), (9, 9, 9, 1)))
    cases.append((graph_of(quadratic_gbent_lk(3, 1, 2, 2)), (9, 9, 9, 1)))
    agree = positives = 0
    for R, params in cases:
        brute = bool(rds_bruteforce(R, params))
        agree += brute == bool(rds_characters(R, params[3]))
        positives += brute
    return report(7, "rds_bruteforce == rds_characters", agree == len(cases), time.perf_counter() - start, 60,
                  f"{agree}/{len(cases)} subsets ({positives} are RDS)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
