"""Dense value tables of functions Z_{p^l}^n -> Z_{p^k}.

Points are indexed little-endian: x = (x_1, ..., x_n) sits at
sum_i x_i (p^l)^(i-1), so x_1 is the fastest-varying coordinate.
Digits of values are 0-indexed: f = sum_{i=0}^{k-1} p^i a_i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cyclotomic import is_prime


@dataclass(frozen=True, eq=False)
class GBFunc:
    p: int
    l: int
    n: int
    k: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        p, l, n, k = self.p, self.l, self.n, self.k
        if not (p >= 3 and is_prime(p)):
            raise ValueError(f"p must be an odd prime, got {p}")
        if l < 1 or n < 1 or k < 1:
            raise ValueError(f"l, n, k must be positive, got l={l}, n={n}, k={k}")
        if l > k:
            raise ValueError(f"need l <= k, got l={l}, k={k}")
        table = np.array(self.table, dtype=np.int64).reshape(-1)
        if table.size != p ** (l * n):
            raise ValueError(f"table must have {p ** (l * n)} entries, got {table.size}")
        if table.size and (table.min() < 0 or table.max() >= p ** k):
            raise ValueError(f"table entries must lie in [0, {p ** k})")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def radix(self) -> int:
        """p^l, the modulus of each input coordinate."""
        return self.p ** self.l

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    def points(self) -> np.ndarray:
        """All inputs as an (size, n) array in table order."""
        return index_digits(np.arange(self.size), self.radix, self.n)

    def __call__(self, x: Sequence[int]) -> int:
        return int(self.table[point_index(x, self.radix)])

    def __eq__(self, other):
        if not isinstance(other, GBFunc):
            return NotImplemented
        return ((self.p, self.l, self.n, self.k) == (other.p, other.l, other.n, other.k)
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.p, self.l, self.n, self.k, self.table.tobytes()))

    def with_table(self, table, k: int | None = None) -> "GBFunc":
        """Same domain, new values (reduced mod p^k)."""
        k = self.k if k is None else k
        return GBFunc(self.p, self.l, self.n, k, np.mod(table, self.p ** k))

    @classmethod
    def from_callable(cls, p: int, l: int, n: int, k: int, fn) -> "GBFunc":
        q = p ** l
        pts = index_digits(np.arange(q ** n), q, n)
        return cls(p, l, n, k, np.array([fn(tuple(int(v) for v in x)) % p ** k for x in pts]))

    @classmethod
    def zero(cls, p: int, l: int, n: int, k: int) -> "GBFunc":
        return cls(p, l, n, k, np.zeros(p ** (l * n), dtype=np.int64))


def index_digits(index, radix: int, n: int) -> np.ndarray:
    """Little-endian base-``radix`` digits of each index, shape (..., n)."""
    index = np.asarray(index, dtype=np.int64)
    powers = radix ** np.arange(n, dtype=np.int64)
    return (index[..., None] // powers) % radix


def point_index(x: Sequence[int], radix: int) -> int:
    return sum(int(v) % radix * radix ** i for i, v in enumerate(x))


@dataclass(frozen=True)
class Digits:
    """Base-p^t block decomposition f = sum_i p^(i t) b_i, least significant block first.

    When t does not divide k the last block has the remaining k mod t digits.
    """

    t: int
    blocks: tuple

    def recompose(self) -> GBFunc:
        first = self.blocks[0]
        p = first.p
        k = sum(b.k for b in self.blocks)
        total = np.zeros(first.size, dtype=np.int64)
        for i, b in enumerate(self.blocks):
            total += p ** (i * self.t) * b.table
        return first.with_table(total, k=k)


def digit_decompose(f: GBFunc, t: int = 1) -> Digits:
    if t < 1 or t > f.k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={f.k}")
    # every block is itself a GBFunc, so it needs at least l digits
    if min(t, f.k % t or t) < f.l:
        raise ValueError(f"digit blocks must be at least l={f.l} digits wide")
    blocks = []
    rest = f.table.copy()
    remaining = f.k
    while remaining > 0:
        width = min(t, remaining)
        blocks.append(GBFunc(f.p, f.l, f.n, width, rest % f.p ** width))
        rest //= f.p ** width
        remaining -= width
    return Digits(t, tuple(blocks))


def digits(f: GBFunc) -> list:
    """The p-ary digit functions a_0, ..., a_{k-1}."""
    return list(digit_decompose(f, 1).blocks)


def split_g_h(f: GBFunc, t: int):
    """f = g + p^t h with g into Z_{p^t} (low digits) and h into Z_{p^(k-t)}."""
    if t < 1 or f.k < 2 * t:
        raise ValueError(f"need k >= 2t with t >= 1, got k={f.k}, t={t}")
    q = f.p ** t
    g = GBFunc(f.p, f.l, f.n, t, f.table % q)
    h = GBFunc(f.p, f.l, f.n, f.k - t, f.table // q)
    return g, h


def _digit_table(a: np.ndarray, lo: int, hi: int, p: int) -> np.ndarray:
    # integer value of digits lo..hi-1 (0-indexed), shifted down to position 0
    return (a // p ** lo) % p ** (hi - lo)


def component_function(f: GBFunc, mode: str, c: Sequence[int] = (), *, t: int = 1, s: int = 2) -> GBFunc:
    """Component functions whose spectra characterize gbent-ness.

    mode "A": h + c p^(k-2t) g into Z_{p^(k-t)}, c in Z_{p^t}  (needs k >= 2t, l = 1).
    mode "B": g_c into Z_{p^(k-(s-1)t)}, c in Z_{p^t}^(s-1)  (needs s t <= k, l = 1).
    mode "C": b_l + sum_j c_j b_j into Z_{p^t}, c in Z_{p^t}^(k/t - 1)  (needs t | k, l = 1).
    mode "D": sum_{i>=k-l} f_i p^(i-(k-l)) + p^(l-1) sum_{i<k-l} c_i f_i into Z_{p^l},
              c in Z_p^(k-l)  (needs l < k).
    """
    mode = mode.upper()
    c = tuple(int(v) for v in c)
    p, k, a = f.p, f.k, f.table
    if mode == "A":
        if f.l != 1:
            raise ValueError("mode A needs l = 1")
        if len(c) != 1 or not 0 <= c[0] < p ** t:
            raise ValueError(f"mode A takes one coefficient in Z_{p ** t}")
        g, h = split_g_h(f, t)
        return h.with_table(h.table + c[0] * p ** (k - 2 * t) * g.table)
    if mode == "B":
        if f.l != 1:
            raise ValueError("mode B needs l = 1")
        if s < 1 or t < 1 or s * t > k:
            raise ValueError(f"mode B needs s >= 1 and s t <= k, got s={s}, t={t}, k={k}")
        if len(c) != s - 1 or any(not 0 <= v < p ** t for v in c):
            raise ValueError(f"mode B takes {s - 1} coefficients in Z_{p ** t}")
        m = k - (s - 1) * t
        middle = _digit_table(a, (s - 1) * t, k - t, p)
        top = _digit_table(a, k - t, k, p)
        mixed = top.copy()
        for i, ci in enumerate(c):
            mixed += ci * _digit_table(a, i * t, (i + 1) * t, p)
        return f.with_table(middle + p ** (k - s * t) * mixed, k=m)
    if mode == "C":
        if f.l != 1:
            raise ValueError("mode C needs l = 1")
        if k % t:
            raise ValueError(f"mode C needs k = l t, got k={k}, t={t}")
        blocks = digit_decompose(f, t).blocks
        if len(c) != len(blocks) - 1 or any(not 0 <= v < p ** t for v in c):
            raise ValueError(f"mode C takes {len(blocks) - 1} coefficients in Z_{p ** t}")
        total = blocks[-1].table.copy()
        for ci, b in zip(c, blocks[:-1]):
            total += ci * b.table
        return f.with_table(total, k=t)
    if mode == "D":
        l = f.l
        if l >= k:
            raise ValueError(f"mode D needs l < k, got l={l}, k={k}")
        if len(c) != k - l or any(not 0 <= v < p for v in c):
            raise ValueError(f"mode D takes {k - l} coefficients in Z_{p}")
        total = _digit_table(a, k - l, k, p)
        for i, ci in enumerate(c):
            total = total + p ** (l - 1) * ci * _digit_table(a, i, i + 1, p)
        return f.with_table(total, k=l)
    raise ValueError(f"unknown mode {mode!r}")


def component_coefficients(f: GBFunc, mode: str, *, t: int = 1, s: int = 2):
    """All coefficient vectors c for ``component_function`` in the given mode."""
    mode = mode.upper()
    p = f.p
    if mode == "A":
        return [(c,) for c in range(p ** t)]
    if mode == "B":
        return list(itertools.product(range(p ** t), repeat=s - 1))
    if mode == "C":
        return list(itertools.product(range(p ** t), repeat=f.k // t - 1))
    if mode == "D":
        return list(itertools.product(range(p), repeat=f.k - f.l))
    raise ValueError(f"unknown mode {mode!r}")


def scale(f: GBFunc, a: int) -> GBFunc:
    """x -> a f(x) mod p^k."""
    return f.with_table(int(a) % f.modulus * f.table)


def gray_image(f: GBFunc) -> GBFunc:
    """Generalized Gray image G(f)(x, y_0..y_{k-2}) = a_{k-1}(x) + sum_i a_i(x) y_i over Z_p.

    The y coordinates follow the x coordinates in the index, y_0 first.
    """
    if f.l != 1:
        raise ValueError("the Gray map is defined for l = 1 only")
    p, n, k = f.p, f.n, f.k
    a = digits(f)
    ys = index_digits(np.arange(p ** (k - 1)), p, k - 1)
    # rows: y index, cols: x index; then flatten y-major so x stays least significant
    values = np.tile(a[k - 1].table, (p ** (k - 1), 1))
    for i in range(k - 1):
        values += ys[:, i:i + 1] * a[i].table[None, :]
    return GBFunc(p, 1, n + k - 1, 1, values.reshape(-1) % p)


def linear_combination(funcs: Sequence[GBFunc], coeffs: Sequence[int]) -> GBFunc:
    """Pointwise Z_p-linear combination of p-ary functions on a shared domain."""
    if not funcs:
        raise ValueError("need at least one function")
    if len(funcs) != len(coeffs):
        raise ValueError("one coefficient per function is required")
    head = funcs[0]
    for g in funcs:
        if (g.p, g.l, g.n) != (head.p, head.l, head.n) or g.k != 1:
            raise ValueError("functions must share (p, l, n) and have k = 1")
    total = np.zeros(head.size, dtype=np.int64)
    for g, c in zip(funcs, coeffs):
        total += int(c) * g.table
    return head.with_table(total, k=1)
