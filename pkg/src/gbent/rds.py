"""Relative difference sets in G = Z_p^n x Z_{p^k} relative to N = {0} x Z_{p^k}.

Group elements are pairs (x index, y) with the x index in the little-endian
order used by function tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cyclotomic import CycloParams, batch_norm_sq, is_rational_const, reduce_counts
from .func import GBFunc, index_digits
from .analysis import Verdict


@dataclass(frozen=True)
class GroupSpec:
    p: int
    n: int
    k: int

    @property
    def order(self) -> int:
        return self.p ** (self.n + self.k)

    @property
    def forbidden_order(self) -> int:
        """|N| = p^k."""
        return self.p ** self.k

    def encode(self, x: int, y: int) -> int:
        return int(x) * self.p ** self.k + int(y)


class SubsetR:
    """A duplicate-free list of group elements (x index, y)."""

    def __init__(self, group: GroupSpec, elements: Iterable):
        elements = [(int(x), int(y)) for x, y in elements]
        for x, y in elements:
            if not (0 <= x < group.p ** group.n and 0 <= y < group.p ** group.k):
                raise ValueError(f"element {(x, y)} is outside the group")
        if len(set(elements)) != len(elements):
            raise ValueError("subset contains duplicate elements")
        self.group = group
        self.elements = elements

    def __len__(self):
        return len(self.elements)

    def arrays(self):
        xs = np.array([x for x, _ in self.elements], dtype=np.int64)
        ys = np.array([y for _, y in self.elements], dtype=np.int64)
        return xs, ys


def graph_of(f: GBFunc) -> SubsetR:
    """R = {(x, f(x))}."""
    if f.l != 1:
        raise ValueError("graphs are taken for l = 1")
    group = GroupSpec(f.p, f.n, f.k)
    return SubsetR(group, zip(range(f.size), f.table.tolist()))


def graph_parameters(group: GroupSpec) -> tuple:
    """(p^n, p^k, p^n, p^(n-k)), the parameters expected of the graph of a Z_{p^k}-bent function."""
    p, n, k = group.p, group.n, group.k
    if n < k:
        raise ValueError(f"graph parameters need n >= k, got n={n}, k={k}")
    return p ** n, p ** k, p ** n, p ** (n - k)


def difference_multiplicities(R: SubsetR) -> np.ndarray:
    """Multiplicity of each group element (encoded) among all ordered differences r1 - r2."""
    g = R.group
    xs, ys = R.arrays()
    dx = index_digits(xs, g.p, g.n)
    diff_x = (dx[:, None, :] - dx[None, :, :]) % g.p
    x_code = diff_x @ (g.p ** np.arange(g.n, dtype=np.int64))
    y_code = (ys[:, None] - ys[None, :]) % g.p ** g.k
    codes = (x_code * g.p ** g.k + y_code).reshape(-1)
    return np.bincount(codes, minlength=g.order)


def rds_bruteforce(R: SubsetR, params: tuple) -> Verdict:
    """Count every ordered difference and test the (u, v, kk, lambda) conditions.

    G \\ N must be covered exactly lambda times, N \\ {0} never, and 0 exactly |R| times.
    """
    u, v, kk, lam = params
    g = R.group
    if u * v != g.order or v != g.forbidden_order or kk != len(R):
        raise ValueError(f"parameters {params} do not fit |G|={g.order}, |N|={g.forbidden_order}, |R|={len(R)}")
    mult = difference_multiplicities(R)
    in_n = np.zeros(g.order, dtype=bool)
    in_n[: g.forbidden_order] = True  # x index 0
    expected = np.where(in_n, 0, lam)
    expected[0] = len(R)
    bad = np.flatnonzero(mult != expected)
    if bad.size:
        e = int(bad[0])
        return Verdict(False, e, f"element (x={e // v}, y={e % v}) occurs {mult[e]} times, expected {expected[e]}")
    return Verdict(True)


def character_sums(R: SubsetR) -> np.ndarray:
    """chi_{u,a}(R) = sum_{(x,y) in R} zeta_p^(-u.x) zeta_{p^k}^(a y) for all (u, a).

    Returns power-basis coefficients, shape (p^n, p^k, D), indexed [u, a].
    """
    g = R.group
    params = CycloParams(g.p, g.k)
    P = params.order
    xs, ys = R.arrays()
    pts = index_digits(xs, g.p, g.n)
    us = index_digits(np.arange(g.p ** g.n), g.p, g.n)
    step = g.p ** (g.k - 1)
    out = np.zeros((g.p ** g.n, P, params.degree), dtype=np.int64)
    for a in range(P):
        exps = (a * ys[None, :] - step * (us @ pts.T)) % P
        counts = np.zeros((us.shape[0], P), dtype=np.int64)
        np.add.at(counts, (np.arange(us.shape[0])[:, None], exps), 1)
        out[:, a] = reduce_counts(counts, params)
    return out


def rds_characters(R: SubsetR, lam: int | None = None) -> Verdict:
    """Character criterion: |chi(R)|^2 is |R|^2, |R| - lambda |N| or |R| by character type.

    Without ``lam`` the value forced by counting, |R|(|R|-1) / (|G|-|N|), is used.
    For the graph of a function this is the table p^(2n), 0, p^n.
    """
    g = R.group
    size, v = len(R), g.forbidden_order
    if lam is None:
        num, den = size * (size - 1), g.order - v
        if num % den:
            return Verdict(False, None, "|R|(|R|-1) is not divisible by |G|-|N|")
        lam = num // den
    params = CycloParams(g.p, g.k)
    sums = character_sums(R)
    norms = batch_norm_sq(sums.reshape(-1, params.degree), params).reshape(sums.shape)
    target = np.full(sums.shape[:2], size, dtype=np.int64)
    target[:, 0] = size - lam * v  # characters trivial on N: a = 0
    target[0, 0] = size * size
    good = is_rational_const(norms, target)
    if good.all():
        return Verdict(True)
    u, a = (int(i) for i in np.argwhere(~good)[0])
    return Verdict(False, u * v + a, f"|chi_(u={u}, a={a})(R)|^2 != {target[u, a]}")
