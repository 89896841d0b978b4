"""Test-vector factories: GF(p^m), regular spreads, spread-based Z_{p^k}-bent
functions, bent lifts and quadratic witnesses with l < k.

Field elements are integers in [0, p^m) whose base-p digits (least significant
first) are the polynomial coefficients.  A vector (x, y) of Z_p^(2m) =
GF(p^m)^2 sits at index enc(x) + p^m enc(y), matching GBFunc's table order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cyclotomic import is_prime
from .func import GBFunc, index_digits

MAX_FIELD_ORDER = 10 ** 4


def _poly_mod(a: list, b: list, p: int) -> list:
    """Remainder of a by the monic b over Z_p (coefficient lists, low degree first)."""
    a = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    rem = a[:db]
    return rem + [0] * (db - len(rem))


def _monic(p: int, d: int):
    """All monic polynomials of degree d, in ascending integer encoding."""
    for low in itertools.product(range(p), repeat=d):
        yield list(reversed(low)) + [1]


def _is_irreducible(poly: list, p: int) -> bool:
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in range(p ** d):
            q = [int(v) for v in index_digits(low, p, d)] + [1]
            if not any(_poly_mod(poly, q, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) as Z_p[x] / (modulus)."""

    p: int
    m: int
    modulus: tuple

    @property
    def order(self) -> int:
        return self.p ** self.m

    def to_poly(self, a: int) -> list:
        return [int(v) for v in index_digits(a, self.p, self.m)]

    def from_poly(self, coeffs) -> int:
        return sum(int(c) % self.p * self.p ** i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return self.from_poly([(x + y) for x, y in zip(self.to_poly(a), self.to_poly(b))])

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.to_poly(a), self.to_poly(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
        return self.from_poly(_poly_mod(prod, list(self.modulus), self.p))

    def mul_matrix(self, s: int) -> np.ndarray:
        """m x m matrix M over Z_p with to_poly(s x) = M @ to_poly(x)."""
        cols = [self.to_poly(self.mul(s, self.p ** j)) for j in range(self.m)]
        return np.array(cols, dtype=np.int64).T

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow_field(self, a, self.order - 2)


def pow_field(field: FieldSpec, a: int, e: int) -> int:
    result, base = 1, a
    while e:
        if e & 1:
            result = field.mul(result, base)
        base = field.mul(base, base)
        e >>= 1
    return result


def gf_make(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the smallest monic irreducible modulus in integer encoding."""
    if not (p >= 3 and is_prime(p)):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1 or p ** m > MAX_FIELD_ORDER:
        raise ValueError(f"need m >= 1 and p^m <= {MAX_FIELD_ORDER}, got p={p}, m={m}")
    for poly in _monic(p, m):
        if _is_irreducible(poly, p):
            return FieldSpec(p, m, tuple(poly))
    raise AssertionError("no irreducible polynomial found")  # cannot happen


@dataclass(frozen=True)
class SpreadFamily:
    """U_0 = {(0, y)} followed by U_s = {(x, s x)}, s = 1..p^m for field element s - 1.

    Each subspace is an m x 2m basis matrix over Z_p.
    """

    p: int
    m: int
    subspaces: tuple

    def elements(self, i: int) -> np.ndarray:
        """Vector indices of all p^m elements of U_i."""
        p, m = self.p, self.m
        combos = index_digits(np.arange(p ** m), p, m)
        vecs = combos @ self.subspaces[i] % p
        return vecs @ (p ** np.arange(2 * m, dtype=np.int64))

    def verify(self) -> bool:
        """Each U_i has p^m elements and the nonzero parts partition Z_p^(2m) \\ {0}."""
        p, m = self.p, self.m
        if len(self.subspaces) != p ** m + 1:
            return False
        hits = np.zeros(p ** (2 * m), dtype=np.int64)
        for i in range(len(self.subspaces)):
            elems = self.elements(i)
            if np.unique(elems).size != p ** m:
                return False
            hits[elems] += 1
        return bool(hits[0] == p ** m + 1 and np.all(hits[1:] == 1))


def regular_spread(field: FieldSpec) -> SpreadFamily:
    p, m = field.p, field.m
    eye = np.eye(m, dtype=np.int64)
    subspaces = [np.hstack([np.zeros((m, m), dtype=np.int64), eye])]
    for s in range(field.order):
        # row i is (e_i, s e_i)
        subspaces.append(np.hstack([eye, field.mul_matrix(s).T]))
    for b in subspaces:
        b.setflags(write=False)
    spread = SpreadFamily(p, m, tuple(subspaces))
    if not spread.verify():
        raise AssertionError("constructed family is not a spread")
    return spread


@dataclass(frozen=True)
class BalancedMap:
    """phi(s) for s = 1..p^m, stored as table[s - 1], into Z_{p^k}."""

    p: int
    m: int
    k: int
    table: tuple

    def __post_init__(self):
        p, m, k = self.p, self.m, self.k
        if not 1 <= k <= m:
            raise ValueError(f"a balanced map needs 1 <= k <= m, got k={k}, m={m}")
        values = np.asarray(self.table, dtype=np.int64)
        if values.shape != (p ** m,):
            raise ValueError(f"table must have {p ** m} entries")
        if values.min() < 0 or values.max() >= p ** k:
            raise ValueError(f"values must lie in [0, {p ** k})")
        if not np.all(np.bincount(values, minlength=p ** k) == p ** (m - k)):
            raise ValueError("map is not balanced")
        object.__setattr__(self, "table", tuple(int(v) for v in values))

    def __call__(self, s: int) -> int:
        return self.table[s - 1]


def default_balanced_map(p: int, m: int, k: int) -> BalancedMap:
    """phi(s) = (s - 1) mod p^k."""
    if k > m:
        raise ValueError(f"need k <= m, got k={k}, m={m}")
    return BalancedMap(p, m, k, tuple((s - 1) % p ** k for s in range(1, p ** m + 1)))


def spread_gbent(spread: SpreadFamily, phi: BalancedMap, k: int | None = None) -> GBFunc:
    """f = phi(s) on U_s \\ {0}, 0 on U_0; a Z_{p^k}-bent function on Z_p^(2m)."""
    p, m = spread.p, spread.m
    k = phi.k if k is None else k
    if (phi.p, phi.m, phi.k) != (p, m, k):
        raise ValueError("balanced map does not match the spread and k")
    table = np.full(p ** (2 * m), -1, dtype=np.int64)
    table[spread.elements(0)] = 0
    for s in range(1, len(spread.subspaces)):
        elems = spread.elements(s)
        elems = elems[elems != 0]
        if np.any(table[elems] >= 0):
            raise AssertionError(f"subspace {s} overlaps an earlier one")
        table[elems] = phi(s)
    if np.any(table < 0):
        raise AssertionError("some vector lies in no subspace")
    return GBFunc(p, 1, 2 * m, k, table)


def lift_bent(g: GBFunc, k: int) -> GBFunc:
    """p^(k-1) g into Z_{p^k}; gbent exactly when g is bent."""
    if g.k != 1:
        raise ValueError("lift_bent takes a p-ary function (k = 1)")
    if k < max(1, g.l):
        raise ValueError(f"need k >= max(1, l), got k={k}, l={g.l}")
    return GBFunc(g.p, g.l, g.n, k, g.p ** (k - 1) * g.table)


def quadratic_gbent_lk(p: int, l: int, k: int, n: int) -> GBFunc:
    """p^(k-l) sum_i x_i^2 mod p^k on Z_{p^l}^n; check with is_gbent before relying on it."""
    if not l < k:
        raise ValueError(f"need l < k, got l={l}, k={k}")
    q = p ** l
    pts = index_digits(np.arange(q ** n), q, n)
    return GBFunc(p, l, n, k, p ** (k - l) * (pts ** 2).sum(axis=1) % p ** k)
