"""Decision procedures for generalized bent functions.

Shapes of Walsh values are matched exactly inside Z[zeta_{p^k}].  A value of
absolute value p^(m/2) is written as

    S = sign * p^floor(m/2) * g_p^[m odd] * zeta^e,

with g_p the quadratic Gauss sum.  Since g_p = sqrt(p) for p = 1 (mod 4) and
g_p = sqrt(-1) sqrt(p) for p = 3 (mod 4), this single normal form covers both
the "+-zeta^e" and the "+-sqrt(-1) zeta^e" cases without adjoining sqrt(-1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import func as F
from .cyclotomic import CycloParams, is_rational_const, unit_match
from .func import GBFunc
from .transform import Spectrum, wht


@dataclass(frozen=True)
class Verdict:
    """A boolean outcome with the first failing point (table index) when false."""

    ok: bool
    witness: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Regularity:
    kind: str  # "regular", "weakly_regular" or "non_weakly_regular"
    sign: int | None = None

    def __str__(self):
        if self.kind == "weakly_regular":
            return f"weakly_regular({self.sign:+d})"
        return self.kind


@dataclass(frozen=True, eq=False)
class DualCertificate:
    """S_f(u) = signs[u] * p^floor(ln/2) * g_p^[gauss_flag] * zeta_{p^k}^dual(u) for all u."""

    dual: GBFunc
    signs: np.ndarray = field(repr=False)
    gauss_flag: bool


@dataclass(frozen=True)
class CertificateEntry:
    j: int
    d: tuple
    signs: tuple  # one per coefficient vector c, in ``coefficients`` order


@dataclass(frozen=True)
class CharacterizationCertificate:
    mode: str
    t: int
    s: int
    coefficients: tuple
    entries: dict  # table index of u -> CertificateEntry
    failure: Verdict | None = None


def _unit_shape(f: GBFunc):
    m = f.l * f.n
    return m // 2, bool(m % 2)


def is_gbent(f: GBFunc, spectrum: Spectrum | None = None) -> Verdict:
    """|S_f(u)|^2 == p^(ln) for every u."""
    spectrum = wht(f) if spectrum is None else spectrum
    good = is_rational_const(spectrum.norm_sq(), f.p ** (f.l * f.n))
    if good.all():
        return Verdict(True)
    u = int(np.argmin(good))
    return Verdict(False, u, "squared magnitude differs from p^(ln)")


def is_bent(g: GBFunc) -> Verdict:
    if g.k != 1:
        raise ValueError("is_bent expects a p-ary function (k = 1)")
    return is_gbent(g)


def classify_and_dual(f: GBFunc, spectrum: Spectrum | None = None):
    """Regularity class and dual of a gbent function.

    Raises ValueError for non-gbent input.  A gbent value that is not of unit
    shape cannot occur mathematically and raises AssertionError.
    """
    spectrum = wht(f) if spectrum is None else spectrum
    verdict = is_gbent(f, spectrum)
    if not verdict:
        raise ValueError(f"function is not gbent (first failure at u index {verdict.witness})")
    scale_exp, gauss = _unit_shape(f)
    signs = np.empty(f.size, dtype=np.int64)
    dual = np.empty(f.size, dtype=np.int64)
    for u, row in enumerate(spectrum.coeffs):
        m = unit_match(row, scale_exp, gauss, spectrum.params)
        if m is None:
            raise AssertionError(f"gbent value at u index {u} is not +-p^a g_p^b zeta^e")
        signs[u], dual[u] = m
    cert = DualCertificate(GBFunc(f.p, f.l, f.n, f.k, dual), signs, gauss)
    no_sqrt_minus_one = not gauss or f.p % 4 == 1
    if (signs == 1).all() and no_sqrt_minus_one:
        cls = Regularity("regular")
    elif (signs == signs[0]).all():
        cls = Regularity("weakly_regular", int(signs[0]))
    else:
        cls = Regularity("non_weakly_regular")
    return cls, cert


def dual(f: GBFunc) -> GBFunc:
    return classify_and_dual(f)[1].dual


def verify_dual_formula(f: GBFunc) -> bool:
    """Rebuild f* from duals of p-ary components and compare with the direct dual.

    b_{k-1} = a_{k-1}*, b_j = (a_{k-1} + a_j)* - a_{k-1}*, f* = sum_i p^i b_i.
    """
    if f.l != 1:
        raise ValueError("dual formula is stated for l = 1")
    direct = classify_and_dual(f)[1].dual
    a = F.digits(f)
    top = a[-1]
    top_dual = dual(top).table
    total = np.zeros(f.size, dtype=np.int64)
    for j in range(f.k - 1):
        b_j = (dual(F.linear_combination([top, a[j]], [1, 1])).table - top_dual) % f.p
        total += f.p ** j * b_j
    total += f.p ** (f.k - 1) * top_dual
    return bool(np.array_equal(total % f.modulus, direct.table))


# component characterizations

def _mode_layout(f: GBFunc, mode: str, t: int, s: int):
    """(stride of j, modulus of j, multiplier q of c.d, modulus of d entries, d length)."""
    p, k = f.p, f.k
    if mode == "A":
        if f.l != 1 or t < 1 or k < 2 * t:
            raise ValueError(f"mode A needs l = 1 and k >= 2t, got l={f.l}, k={k}, t={t}")
        return p ** t, p ** (k - t), p ** (k - t), p ** t, 1
    if mode == "B":
        if f.l != 1 or t < 1 or s < 1 or s * t > k:
            raise ValueError(f"mode B needs l = 1, s >= 1 and s t <= k, got l={f.l}, k={k}, s={s}, t={t}")
        return p ** ((s - 1) * t), p ** (k - (s - 1) * t), p ** (k - t), p ** t, s - 1
    if mode == "C":
        if f.l != 1 or t < 1 or k % t:
            raise ValueError(f"mode C needs l = 1 and t | k, got l={f.l}, k={k}, t={t}")
        return p ** (k - t), p ** t, p ** (k - t), p ** t, k // t - 1
    if mode == "D":
        if f.l >= k:
            raise ValueError(f"mode D needs l < k, got l={f.l}, k={k}")
        return p ** (k - f.l), p ** f.l, p ** (k - 1), p, k - f.l
    raise ValueError(f"unknown mode {mode!r}")


def legal_parameters(f: GBFunc, mode: str) -> list:
    """Every (t, s) pair for which ``mode`` applies to f."""
    mode = mode.upper()
    k = f.k
    if mode == "D":
        return [(1, 2)] if f.l < k else []
    if f.l != 1:
        return []
    if mode == "A":
        return [(t, 2) for t in range(1, k // 2 + 1)]
    if mode == "B":
        return [(t, s) for t in range(1, k + 1) for s in range(1, k // t + 1)]
    if mode == "C":
        return [(t, k // t) for t in range(1, k + 1) if k % t == 0]
    raise ValueError(f"unknown mode {mode!r}")


def component_spectra(f: GBFunc, mode: str, t: int = 1, s: int = 2):
    """Coefficient vectors c and the spectra of the matching components, embedded in Z[zeta_{p^k}]."""
    mode = mode.upper()
    coeffs = F.component_coefficients(f, mode, t=t, s=s)
    spectra = [wht(F.component_function(f, mode, c, t=t, s=s), ambient_k=f.k) for c in coeffs]
    return coeffs, spectra


def characterization_check(f: GBFunc, mode: str, t: int = 1, s: int = 2):
    """Decide gbent-ness of f from the spectra of its component functions.

    For every u there must be one sign, one j and one vector d with

        S_{comp_c}(u) = sign * B * zeta_{p^k}^(j * stride + q * (c . d))

    for all c, where B is the unit-shape scale of f and (stride, q) depend on
    the mode.  Given such data for c = 0 and for the unit vectors, the
    candidate (sign, j, d) is unique, so solving for it and checking every c
    decides existence exactly.
    """
    mode = mode.upper()
    stride, j_mod, q, d_mod, width = _mode_layout(f, mode, t, s)
    coeffs, spectra = component_spectra(f, mode, t, s)
    params = CycloParams(f.p, f.k)
    P = params.order
    scale_exp, gauss = _unit_shape(f)
    index = {c: i for i, c in enumerate(coeffs)}
    zero = (0,) * width
    units = [tuple(int(i == r) for i in range(width)) for r in range(width)]
    entries = {}

    def fail(u, why):
        return False, CharacterizationCertificate(mode, t, s, tuple(coeffs), entries, Verdict(False, u, why))

    for u in range(f.size):
        matches = [unit_match(spec.coeffs[u], scale_exp, gauss, params) for spec in spectra]
        base = matches[index[zero]]
        if base is None:
            return fail(u, "component c=0 is not of unit shape")
        sign, e0 = base
        if e0 % stride:
            return fail(u, "exponent of component c=0 is outside the allowed j-range")
        d = []
        for unit in units:
            m = matches[index[unit]]
            if m is None or m[0] != sign or (m[1] - e0) % q:
                return fail(u, f"component c={unit} does not share the shape of c=0")
            d.append(((m[1] - e0) % P) // q % d_mod)
        for c, m in zip(coeffs, matches):
            expected = (e0 + q * (sum(ci * di for ci, di in zip(c, d)) % d_mod)) % P
            if m != (sign, expected):
                return fail(u, f"component c={c} breaks the shared (sign, j, d)")
        entries[u] = CertificateEntry(e0 // stride % j_mod, tuple(d), tuple(m[0] for m in matches))
    return True, CharacterizationCertificate(mode, t, s, tuple(coeffs), entries)


# Z_{p^k}-bentness, plateaued functions, Gray images

def is_zpk_bent_definition(f: GBFunc) -> Verdict:
    """Every nonzero multiple a f (a in Z_{p^k}) is gbent."""
    if f.l != 1:
        raise ValueError("Z_{p^k}-bentness is defined for l = 1")
    for a in range(1, f.modulus):
        v = is_gbent(F.scale(f, a))
        if not v:
            return Verdict(False, v.witness, f"multiple a={a} is not gbent")
    return Verdict(True)


def is_zpk_bent_proposition(f: GBFunc) -> Verdict:
    """p^t f is gbent for t = 0, ..., k-1."""
    if f.l != 1:
        raise ValueError("Z_{p^k}-bentness is defined for l = 1")
    for t in range(f.k):
        v = is_gbent(F.scale(f, f.p ** t))
        if not v:
            return Verdict(False, v.witness, f"multiple p^{t} is not gbent")
    return Verdict(True)


def is_zpk_bent(f: GBFunc, method: str = "proposition") -> Verdict:
    if method == "definition":
        return is_zpk_bent_definition(f)
    if method == "proposition":
        return is_zpk_bent_proposition(f)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class Plateau:
    s: int
    uniform: bool
    exponents: dict  # table index of u with S(u) != 0 -> (sign, a)


def plateaued_order(g: GBFunc) -> Plateau | None:
    """The s for which g is s-plateaued, or None.

    Every Walsh value must be 0 or sign * p^floor((n+s)/2) * g_p^[(n+s) odd] * zeta_p^a.
    The exponent a may depend on u; ``uniform`` reports whether it does not.
    """
    if g.k != 1:
        raise ValueError("plateaued functions are p-ary (k = 1)")
    spectrum = wht(g)
    norms = spectrum.norm_sq()
    if np.any(norms[:, 1:] != 0):
        return None
    values = norms[:, 0]
    top = int(values.max())
    m, power = 0, 1
    while power < top:
        power *= g.p
        m += 1
    n = g.l * g.n
    s = m - n
    if power != top or s < 0 or np.any((values != 0) & (values != top)):
        return None
    exps = {}
    for u in np.flatnonzero(values):
        match = unit_match(spectrum.coeffs[u], m // 2, bool(m % 2), spectrum.params)
        if match is None:
            return None
        exps[int(u)] = match
    uniform = len({a for _, a in exps.values()}) == 1
    return Plateau(s, uniform, exps)


def verify_gray_plateaued(f: GBFunc) -> Verdict:
    """Check that the Gray image of gbent f is (k-1)-plateaued; witness holds the s found."""
    if not is_gbent(f):
        raise ValueError("function is not gbent")
    info = plateaued_order(F.gray_image(f))
    if info is None:
        return Verdict(False, None, "Gray image is not plateaued")
    return Verdict(info.s == f.k - 1, info.s, f"s = {info.s}")


def is_vectorial_bent(components: Sequence[GBFunc]) -> Verdict:
    """Every nonzero Z_p-combination of the components is bent."""
    components = list(components)
    if not components:
        raise ValueError("need at least one component")
    p = components[0].p
    for coeffs in itertools.product(range(p), repeat=len(components)):
        if not any(coeffs):
            continue
        if not is_gbent(F.linear_combination(components, coeffs)):
            return Verdict(False, None, f"combination {coeffs} is not bent")
    return Verdict(True)
