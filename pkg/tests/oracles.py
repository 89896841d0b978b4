"""Independent reference computations used by the tests.

These deliberately avoid the package's exact ring code: character sums are
evaluated in complex floating point, and combinatorial checks use plain
Python sets and loops.  Tolerances are far below the gaps between the
quantities being compared (integers or roots of unity).
"""
import cmath
import itertools

import numpy as np

TOL = 1e-7


def root(P, e):
    return cmath.exp(2j * cmath.pi * e / P)


def evaluate(coeffs, P):
    """Complex value of a power-basis coefficient vector in Q(zeta_P)."""
    return sum(int(c) * root(P, j) for j, c in enumerate(coeffs))


def points(q, n):
    # little-endian: x_1 varies fastest
    return [tuple(reversed(x)) for x in itertools.product(range(q), repeat=n)]


def walsh_complex(p, l, n, k, table):
    """S_f(u) = sum_x zeta_{p^l}^(-u.x) zeta_{p^k}^(f(x)) by direct summation."""
    q = p ** l
    pts = points(q, n)
    out = []
    for u in pts:
        s = 0
        for x, fx in zip(pts, table):
            dot = sum(a * b for a, b in zip(u, x))
            s += root(q, -dot) * root(p ** k, int(fx))
        out.append(s)
    return out


def is_gbent_complex(p, l, n, k, table):
    return all(abs(abs(s) ** 2 - p ** (l * n)) < TOL * p ** (l * n) for s in walsh_complex(p, l, n, k, table))


def gauss_complex(p):
    return sum(root(p, j * j) for j in range(p))


def unit_shape_complex(s, p, P, scale_exp, with_gauss):
    """(sign, e) with s = sign p^scale_exp g_p^[with_gauss] zeta_P^e, or None."""
    base = p ** scale_exp * (gauss_complex(p) if with_gauss else 1)
    for sign in (1, -1):
        for e in range(P):
            if abs(s - sign * base * root(P, e)) < TOL * abs(base):
                return sign, e
    return None


def certificate_search(p, k, l, n, component_values, coeffs, mode, t, s):
    """Brute-force existence of shared (sign, j, d) per u, by enumerating every candidate.

    component_values[c_index][u] are complex spectra of the component functions.
    """
    P = p ** k
    scale_exp, gauss = (l * n) // 2, bool((l * n) % 2)
    if mode == "A":
        stride, jr, q, dr, width = p ** t, p ** (k - t), p ** (k - t), p ** t, 1
    elif mode == "B":
        stride, jr, q, dr, width = p ** ((s - 1) * t), p ** (k - (s - 1) * t), p ** (k - t), p ** t, s - 1
    elif mode == "C":
        stride, jr, q, dr, width = p ** (k - t), p ** t, p ** (k - t), p ** t, k // t - 1
    else:
        stride, jr, q, dr, width = p ** (k - l), p ** l, p ** (k - 1), p, k - l
    size = len(component_values[0])
    shapes = [[unit_shape_complex(vals[u], p, P, scale_exp, gauss) for u in range(size)]
              for vals in component_values]
    for u in range(size):
        found = False
        for sign in (1, -1):
            for j in range(jr):
                for d in itertools.product(range(dr), repeat=width):
                    if all(shapes[i][u] == (sign, (j * stride + q * sum(a * b for a, b in zip(c, d))) % P)
                           for i, c in enumerate(coeffs)):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return False
    return True


def rds_count(group_p, n, k, elements, lam):
    """Set-based check of the relative difference set conditions."""
    P = group_p ** k
    counts = {}
    pts = points(group_p, n)
    for (x1, y1), (x2, y2) in itertools.product(elements, repeat=2):
        if (x1, y1) == (x2, y2):
            continue
        a, b = pts[x1], pts[x2]
        diff = (tuple((i - j) % group_p for i, j in zip(a, b)), (y1 - y2) % P)
        counts[diff] = counts.get(diff, 0) + 1
    zero = tuple([0] * n)
    for x in pts:
        for y in range(P):
            got = counts.get((x, y), 0)
            if x == zero:
                if got:
                    return False
            elif got != lam:
                return False
    return True


def random_table(rng, p, l, n, k):
    return rng.integers(0, p ** k, size=p ** (l * n))


def is_irreducible_by_roots(poly, p):
    """Degree <= 3: irreducible iff no root in Z_p."""
    return all(sum(c * x ** i for i, c in enumerate(poly)) % p for x in range(p))


def as_array(values):
    return np.array(values, dtype=np.int64)
