"""Exact generalized Walsh-Hadamard transforms of functions Z_{p^l}^n -> Z_{p^k}.

Everything is unnormalized: S_f(u) = sum_x zeta_{p^l}^(-u.x) zeta_{p^k}^(f(x)),
so that the normalized transform is p^(-ln/2) S_f(u).  Both roots of unity are
embedded in one ring Z[zeta_{p^K}], K >= k (``ambient_k``), through
zeta_{p^m} = zeta_{p^K}^(p^(K-m)); this lets spectra of functions with smaller
codomains be compared directly against spectra of f.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import CycInt, CycloParams, batch_norm_sq, is_rational_const, lift, reduce_counts
from .func import GBFunc, point_index


@dataclass(frozen=True, eq=False)
class Spectrum:
    params: CycloParams
    l: int
    n: int
    coeffs: np.ndarray = field(repr=False)

    @property
    def radix(self) -> int:
        return self.params.p ** self.l

    @property
    def norm_exp(self) -> int:
        """ln, so that the normalized transform is p^(-norm_exp/2) S."""
        return self.l * self.n

    def __len__(self):
        return self.coeffs.shape[0]

    def __getitem__(self, u) -> CycInt:
        if not isinstance(u, (int, np.integer)):
            u = point_index(u, self.radix)
        return CycInt(self.params, self.coeffs[int(u)])

    def values(self) -> list:
        return [CycInt(self.params, row) for row in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.params == other.params and self.l == other.l and self.n == other.n
                and np.array_equal(self.coeffs, other.coeffs))

    def norm_sq(self) -> np.ndarray:
        """Power-basis coefficients of |S(u)|^2 for every u, shape (p^(ln), D)."""
        return batch_norm_sq(self.coeffs, self.params)

    def parseval_holds(self) -> bool:
        total = self.norm_sq().astype(object).sum(axis=0)
        return bool(is_rational_const(total[None, :], self.params.p ** (2 * self.norm_exp))[0])


def _ambient(f: GBFunc, ambient_k: int | None) -> CycloParams:
    K = f.k if ambient_k is None else ambient_k
    if K < f.k:
        raise ValueError(f"ambient ring exponent {K} is smaller than k={f.k}")
    return CycloParams(f.p, K)


def wht_naive(f: GBFunc, ambient_k: int | None = None) -> Spectrum:
    """Direct evaluation of every sum, one output point at a time."""
    params = _ambient(f, ambient_k)
    P, K = params.order, params.k
    kernel_step = f.p ** (K - f.l)
    value_exp = f.p ** (K - f.k) * f.table
    pts = f.points()
    out = np.zeros((f.size, params.degree), dtype=np.int64)
    for u_idx in range(f.size):
        dots = pts @ pts[u_idx]
        exps = (value_exp - kernel_step * dots) % P
        out[u_idx] = reduce_counts(np.bincount(exps, minlength=P), params)
    return Spectrum(params, f.l, f.n, out)


def wht_fast(f: GBFunc, ambient_k: int | None = None) -> Spectrum:
    """Butterfly transform: one p^l-point character transform per coordinate.

    The working values are group-ring count vectors, where multiplying by a
    root of unity is a cyclic shift; the reduction to the power basis happens
    once at the end.
    """
    params = _ambient(f, ambient_k)
    P, K = params.order, params.k
    q, n = f.radix, f.n
    kernel_step = f.p ** (K - f.l)
    state = np.zeros((f.size, P), dtype=np.int64)
    state[np.arange(f.size), (f.p ** (K - f.k) * f.table) % P] = 1
    for i in range(n):
        view = state.reshape(q ** (n - 1 - i), q, q ** i, P)
        new = np.zeros_like(view)
        for v in range(q):
            acc = new[:, v]
            for x in range(q):
                acc += np.roll(view[:, x], -kernel_step * v * x, axis=-1)
        state = new.reshape(f.size, P)
    return Spectrum(params, f.l, f.n, reduce_counts(state, params))


def wht(f: GBFunc, ambient_k: int | None = None) -> Spectrum:
    return wht_fast(f, ambient_k)


def inverse_check(f: GBFunc, spec: Spectrum) -> bool:
    """Check p^(ln) zeta_{p^k}^(f(x)) == sum_u zeta_{p^l}^(u.x) S_f(u) for every x."""
    params = spec.params
    P, K = params.order, params.k
    if (spec.l, spec.n) != (f.l, f.n) or params.p != f.p or K < f.k:
        raise ValueError("spectrum does not match the function's shape")
    kernel_step = f.p ** (K - f.l)
    pts = f.points()
    lifted = lift(spec.coeffs, params)
    rows = np.arange(f.size)[:, None]
    lanes = np.arange(P)[None, :]
    scale = f.p ** spec.norm_exp
    for x_idx in range(f.size):
        shifts = kernel_step * (pts @ pts[x_idx]) % P
        # multiplying by zeta^s moves count e to e + s
        acc = lifted[rows, (lanes - shifts[:, None]) % P].sum(axis=0)
        expected = np.zeros(P, dtype=np.int64)
        expected[(f.p ** (K - f.k) * int(f.table[x_idx])) % P] = scale
        if not np.array_equal(reduce_counts(acc, params), reduce_counts(expected, params)):
            return False
    return True


def spectrum_from_values(values, l: int, n: int) -> Spectrum:
    """Assemble a Spectrum from a list of CycInt (all in the same ring)."""
    values = list(values)
    params = values[0].params
    return Spectrum(params, l, n, np.array([v.coeffs for v in values], dtype=np.int64))


__all__ = ["Spectrum", "wht_naive", "wht_fast", "wht", "inverse_check", "spectrum_from_values"]
