"""Exact arithmetic in the ring of integers Z[zeta] of Q(zeta), zeta = exp(2 pi i / p^k).

Elements are stored on the power basis 1, zeta, ..., zeta^(D-1) with
D = (p-1) p^(k-1).  That basis is integral, so the coefficient vector is a
canonical form and equality is plain vector equality.

Sums of roots of unity are most naturally built in the group ring
Z[x]/(x^(p^k) - 1) as exponent counts; ``reduce_counts`` maps such count
vectors onto the power basis (it is a ring homomorphism, x -> zeta).
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class CycloParams:
    """The ring Z[zeta_{p^k}] for an odd prime p."""

    p: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.p, (int, np.integer)) and self.p >= 3 and is_prime(int(self.p))):
            raise ValueError(f"p must be an odd prime, got {self.p!r}")
        if not (isinstance(self.k, (int, np.integer)) and self.k >= 1):
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def order(self) -> int:
        """p^k, the order of zeta."""
        return self.p ** self.k

    @property
    def degree(self) -> int:
        return (self.p - 1) * self.p ** (self.k - 1)


def reduce_counts(counts, params: CycloParams) -> np.ndarray:
    """Map exponent-count vectors (last axis of length p^k) to power-basis coefficients.

    Uses zeta^((p-1) p^(k-1) + r) = -sum_{j<p-1} zeta^(j p^(k-1) + r) for r < p^(k-1),
    which is a single rewriting step because every right-hand exponent is below D.
    """
    counts = np.asarray(counts)
    P, D = params.order, params.degree
    if counts.shape[-1] != P:
        raise ValueError(f"expected last axis of length {P}, got {counts.shape[-1]}")
    block = params.p ** (params.k - 1)
    out = counts[..., :D].copy()
    tail = counts[..., D:]
    for j in range(params.p - 1):
        out[..., j * block:(j + 1) * block] -= tail
    return out


@functools.cache
def _power_table(params: CycloParams) -> np.ndarray:
    # row e holds the reduced coefficients of zeta^e, e in [0, p^k)
    return reduce_counts(np.eye(params.order, dtype=np.int64), params)


class CycInt:
    """An element of Z[zeta_{p^k}] with arbitrary-precision integer coefficients.

    Instances are immutable and hashable.  Arithmetic with plain ``int``
    operands treats them as rational integers.
    """

    __slots__ = ("params", "coeffs")

    def __init__(self, params: CycloParams, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != params.degree:
            raise ValueError(f"need {params.degree} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    # constructors

    @classmethod
    def zero(cls, params: CycloParams) -> "CycInt":
        return cls(params, [0] * params.degree)

    @classmethod
    def from_int(cls, params: CycloParams, value: int) -> "CycInt":
        coeffs = [0] * params.degree
        coeffs[0] = int(value)
        return cls(params, coeffs)

    @classmethod
    def from_counts(cls, params: CycloParams, counts: Sequence[int]) -> "CycInt":
        """Build sum_e counts[e] * zeta^e from a length-p^k count vector."""
        counts = list(counts)
        if len(counts) != params.order:
            raise ValueError(f"expected {params.order} counts, got {len(counts)}")
        return cls(params, _reduce_int_counts(counts, params))

    @classmethod
    def root(cls, params: CycloParams, exponent: int) -> "CycInt":
        return reduce(exponent, params)

    # ring structure

    def _check(self, other: "CycInt"):
        if self.params != other.params:
            raise ValueError(f"parameter mismatch: {self.params} vs {other.params}")

    def _coerce(self, other):
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.params, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.params, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.params, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CycInt(self.params, (int(other) * a for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        P = self.params.order
        acc = [0] * P
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                acc[(i + j) % P] += a * b
        return CycInt(self.params, _reduce_int_counts(acc, self.params))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in the ring")
        result = CycInt.from_int(self.params, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycInt.from_int(self.params, int(other))
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.params, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"CycInt(p={self.params.p}, k={self.params.k}: {body})"

    # field structure

    def galois(self, j: int) -> "CycInt":
        return galois(self, j)

    def conj(self) -> "CycInt":
        return galois(self, -1)

    def norm_sq(self) -> "CycInt":
        return norm_sq(self)

    def rational_value(self):
        """The integer value if this element is a rational integer, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def embed(self, k: int) -> "CycInt":
        """Image in Z[zeta_{p^k}] for k >= self.params.k, via zeta_small = zeta_big^(p^(k - k_small))."""
        if k < self.params.k:
            raise ValueError("can only embed into a larger cyclotomic ring")
        big = CycloParams(self.params.p, k)
        step = self.params.p ** (k - self.params.k)
        coeffs = [0] * big.degree
        # j*step < degree of the big ring, so the image is already reduced
        for j, c in enumerate(self.coeffs):
            coeffs[j * step] = c
        return CycInt(big, coeffs)

    def to_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)


def _reduce_int_counts(counts: Sequence[int], params: CycloParams) -> list:
    P, D = params.order, params.degree
    block = params.p ** (params.k - 1)
    out = list(counts[:D])
    for r, c in enumerate(counts[D:P]):
        if c:
            for j in range(params.p - 1):
                out[j * block + r] -= c
    return out


def reduce(exponent: int, params: CycloParams) -> CycInt:
    """Canonical power-basis form of zeta_{p^k}^exponent (any integer exponent)."""
    return CycInt(params, _power_table(params)[int(exponent) % params.order])


def add(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    return a + b


def negate(a: CycInt) -> CycInt:
    return -a


def mul(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    return a * b


def galois(a: CycInt, j: int) -> CycInt:
    """Apply sigma_j: zeta -> zeta^j.  ``j = -1`` is complex conjugation."""
    params = a.params
    if math.gcd(int(j), params.p) != 1:
        raise ValueError(f"Galois index {j} is not coprime to p={params.p}")
    P = params.order
    counts = [0] * P
    for e, c in enumerate(a.coeffs):
        if c:
            counts[(e * j) % P] += c
    return CycInt(params, _reduce_int_counts(counts, params))


def norm_sq(a: CycInt) -> CycInt:
    """a * conj(a), i.e. |a|^2 as an element of the ring."""
    return a * galois(a, -1)


@functools.cache
def gauss_sum(params: CycloParams) -> CycInt:
    """Quadratic Gauss sum g_p = sum_{j in Z_p} zeta_p^(j^2), with g_p^2 = (-1)^((p-1)/2) p."""
    p = params.p
    step = p ** (params.k - 1)
    counts = [0] * params.order
    for j in range(p):
        counts[(j * j % p) * step] += 1
    return CycInt.from_counts(params, counts)


def _root_of(params: CycloParams, t: int, exponent: int) -> int:
    # exponent of zeta_{p^k} representing zeta_{p^t}^exponent
    return (exponent % params.p ** t) * params.p ** (params.k - t)


def _check_gamma_args(c: Sequence[int], t: int, params: CycloParams, l):
    if l is not None and len(c) != l - 1:
        raise ValueError(f"c must have length l-1 = {l - 1}, got {len(c)}")
    if t < 1 or t > params.k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={params.k}")
    if params.k < len(c) * t + 1 and len(c) > 0:
        raise ValueError(f"need k >= (l-1) t + 1, got k={params.k}, (l-1) t={len(c) * t}")
    q = params.p ** t
    for ci in c:
        if not 0 <= ci < q:
            raise ValueError(f"entries of c must lie in Z_{q}, got {ci}")


def gamma(c: Sequence[int], t: int, params: CycloParams, l: int | None = None) -> CycInt:
    """gamma_c = sum_{d in Z_{p^t}^{l-1}} zeta_{p^t}^(-c.d) zeta_{p^k}^(sum_j p^((j-1)t) d_j)."""
    c = tuple(int(x) for x in c)
    _check_gamma_args(c, t, params, l)
    q = params.p ** t
    P = params.order
    counts = [0] * P
    for d in itertools.product(range(q), repeat=len(c)):
        cd = sum(ci * di for ci, di in zip(c, d))
        e = sum(q ** j * dj for j, dj in enumerate(d))
        counts[(_root_of(params, t, -cd) + e) % P] += 1
    return CycInt.from_counts(params, counts)


def gamma_product(c: Sequence[int], t: int, params: CycloParams, l: int | None = None) -> CycInt:
    """Product form prod_i (sum_{v in Z_{p^t}} zeta_{p^t}^(-v c_i) zeta_{p^k}^(p^((i-1)t) v))."""
    c = tuple(int(x) for x in c)
    _check_gamma_args(c, t, params, l)
    q = params.p ** t
    result = CycInt.from_int(params, 1)
    for i, ci in enumerate(c):
        factor = CycInt.zero(params)
        for v in range(q):
            factor = factor + reduce(_root_of(params, t, -v * ci) + q ** i * v, params)
        result = result * factor
    return result


def gamma_inversion_check(u: Sequence[int], t: int, params: CycloParams) -> bool:
    """Check p^(t(l-1)) zeta^(sum_j u_j p^((j-1)t)) == sum_c zeta_{p^t}^(c.u) gamma_c exactly."""
    u = tuple(int(x) for x in u)
    q = params.p ** t
    lhs = reduce(sum(q ** j * uj for j, uj in enumerate(u)), params) * q ** len(u)
    rhs = CycInt.zero(params)
    for c in itertools.product(range(q), repeat=len(u)):
        cu = sum(ci * ui for ci, ui in zip(c, u))
        rhs = rhs + reduce(_root_of(params, t, cu), params) * gamma(c, t, params)
    return lhs == rhs


def digit_identity_check(a: int, t: int, params: CycloParams) -> bool:
    """Check p^t zeta^a == sum_{i in Z_{p^t}} (sum_{j in Z_{p^t}} zeta_{p^t}^((a-i) j)) zeta^i."""
    if t > params.k:
        raise ValueError(f"need t <= k, got t={t}, k={params.k}")
    q = params.p ** t
    lhs = reduce(a, params) * q
    rhs = CycInt.zero(params)
    for i in range(q):
        inner = CycInt.zero(params)
        for j in range(q):
            inner = inner + reduce(_root_of(params, t, (a - i) * j), params)
        rhs = rhs + inner * reduce(i, params)
    return lhs == rhs


def unit_target(scale_exp: int, with_gauss: bool, params: CycloParams) -> CycInt:
    """p^scale_exp, times g_p when ``with_gauss``."""
    base = CycInt.from_int(params, params.p ** scale_exp)
    return base * gauss_sum(params) if with_gauss else base


@functools.cache
def _unit_lookup(params: CycloParams, scale_exp: int, with_gauss: bool) -> dict:
    target = unit_target(scale_exp, with_gauss, params)
    table = {}
    for e in range(params.order):
        z = target * reduce(e, params)
        table[z.coeffs] = (1, e)
        table[(-z).coeffs] = (-1, e)
    if len(table) != 2 * params.order:
        raise AssertionError("unit shapes are not pairwise distinct")
    return table


def unit_match(s, scale_exp: int, with_gauss: bool, params: CycloParams | None = None):
    """Recognize s = sign * p^scale_exp * g_p^[with_gauss] * zeta^e.

    ``s`` is a CycInt or a coefficient sequence (then ``params`` is required).
    Returns ``(sign, e)`` or ``None`` when s has a different shape.
    """
    if isinstance(s, CycInt):
        params = s.params
        key = s.coeffs
    else:
        if params is None:
            raise ValueError("params required for raw coefficient input")
        key = tuple(int(x) for x in s)
    return _unit_lookup(params, scale_exp, bool(with_gauss)).get(key)


# Batched helpers on coefficient arrays, shape (..., D).

def lift(coeffs, params: CycloParams) -> np.ndarray:
    """Zero-pad power-basis coefficients to length-p^k group-ring vectors."""
    coeffs = np.asarray(coeffs)
    pad = [(0, 0)] * (coeffs.ndim - 1) + [(0, params.order - params.degree)]
    return np.pad(coeffs, pad)


def _safe_dtype(coeffs: np.ndarray, params: CycloParams):
    if coeffs.dtype == object:
        return object
    bound = int(np.abs(coeffs).max(initial=0))
    return np.int64 if bound * bound * params.order < 2 ** 62 else object


def batch_norm_sq(coeffs, params: CycloParams) -> np.ndarray:
    """Row-wise a * conj(a) for a stack of power-basis coefficient vectors."""
    coeffs = np.asarray(coeffs)
    dtype = _safe_dtype(coeffs, params)
    a = lift(coeffs.astype(dtype), params)
    P = params.order
    conj = a[..., (-np.arange(P)) % P]
    out = np.zeros_like(a)
    for e in range(params.degree):
        col = a[..., e:e + 1]
        if dtype != object and not col.any():
            continue
        out += col * np.roll(conj, e, axis=-1)
    return reduce_counts(out, params)


def is_rational_const(coeffs, value: int) -> np.ndarray:
    """Row-wise test that coefficient vectors equal the rational integer ``value``."""
    coeffs = np.asarray(coeffs)
    return (coeffs[..., 0] == value) & ~np.any(coeffs[..., 1:] != 0, axis=-1)
