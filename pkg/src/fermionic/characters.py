"""Closed-form characters: fusion products of sl2 / sl3 modules and the two
families of coinvariants.

Variables: ``q`` counts t-degree; ``z`` (and ``z1``, ``z2``) are stored in
half-steps, except for :func:`ch_vmmbar` which needs sixth-steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import QZ, QZZ, QZZ6, LaurentPoly, poly_sum
from .kostka import alternating_terms, restricted_kostka, unrestricted_kostka
from .qcomb import as_composition, compositions_below, f_coeff, lambda_partial, weight


@dataclass(frozen=True)
class CoinvariantParams:
    """Level, highest weight, and either N or the pair (M, Mbar)."""

    k: int
    l: int
    N: int | None = None
    M: tuple[int, ...] | None = None
    Mbar: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.l <= self.k:
            raise ValueError(f"need k >= 1 and 0 <= l <= k, got k={self.k}, l={self.l}")
        if self.N is not None and self.N < 0:
            raise ValueError("N must be non-negative")
        for name in ("M", "Mbar"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_composition(v, self.k))

    @property
    def big_M(self) -> tuple[int, ...]:
        """(0, ..., 0, N)."""
        return (0,) * (self.k - 1) + (self.N,)


def _lift_q(p: LaurentPoly, ring) -> LaurentPoly:
    return p.extend(ring)


def _support(M: Sequence[int]):
    M = tuple(M)
    lam = lambda_partial(M)
    for m in compositions_below(M):
        assert all(a <= b for a, b in zip(lambda_partial(m), lam))
        yield m


@lru_cache(maxsize=None)
def chi(m: tuple[int, ...]) -> LaurentPoly:
    """chi_m(q, z) = sum_n z^{|m|-|n|} F_{m,n}(q)."""
    m = as_composition(m)
    w = weight(m)
    terms = []
    for n in _support(m):
        terms.append(_lift_q(f_coeff(m, n), QZ).shift(z=w - weight(n)))
    return poly_sum(terms, QZ)


@lru_cache(maxsize=None)
def ch_pi(m: tuple[int, ...]) -> LaurentPoly:
    """Character of the fusion product pi_m: z^{-|m|/2} chi_m(q, z)."""
    m = as_composition(m)
    return chi(m).shift(z=Fraction(-weight(m), 2))


def _in_vars(p: LaurentPoly, name: str, ring) -> LaurentPoly:
    """Rename z to ``name`` inside ``ring`` (q is kept)."""
    zi = p.ring.index("z")
    j = ring.index(name)
    factor = ring.scales[j] // p.ring.scales[zi]
    out = {}
    for e, c in p.items():
        new = [0] * ring.nvars
        new[0] = e[0]
        new[j] = e[zi] * factor
        out[tuple(new)] = c
    return LaurentPoly(ring, out)


def ch_vm(M: Sequence[int]) -> LaurentPoly:
    """sum_m F_{M,m}(q) ch_{q,z1} pi_m ch_{q,z2} pi_m."""
    M = as_composition(M)
    terms = []
    for m in _support(M):
        f = f_coeff(M, m)
        if not f:
            continue
        p = ch_pi(m)
        terms.append(_lift_q(f, QZZ) * _in_vars(p, "z1", QZZ) * _in_vars(p, "z2", QZZ))
    return poly_sum(terms, QZZ)


def _pad(a: Sequence[int], b: Sequence[int]):
    k = max(len(a), len(b))
    return as_composition(a, k), as_composition(b, k)


def _diagonal(p: LaurentPoly) -> LaurentPoly:
    """ch(q, z) -> ch(q, z1 z2) in sixth-step storage."""
    zi = p.ring.index("z")
    f = QZZ6.scales[1] // p.ring.scales[zi]
    return LaurentPoly(QZZ6, {(e[0], e[zi] * f, e[zi] * f): c for e, c in p.items()})


def ch_vmmbar(M: Sequence[int], Mbar: Sequence[int]) -> LaurentPoly:
    """Character of the sl3 fusion product of Pi_{k_i} and Pibar_{kbar_j}.

    sum F_{M,m} F_{Mbar,mbar} ch_{q,z1 z2} pi_{m+mbar}
        * (z1^{-1} z2)^{(|M|-|Mbar|)/3 - (|m|-|mbar|)/2}
    """
    M, Mbar = _pad(M, Mbar)
    WM, WMb = weight(M), weight(Mbar)
    terms = []
    for m in _support(M):
        f = f_coeff(M, m)
        if not f:
            continue
        for mb in _support(Mbar):
            g = f_coeff(Mbar, mb)
            if not g:
                continue
            # 6 * exponent of (z1^{-1} z2)
            s6 = 2 * (WM - WMb) - 3 * (weight(m) - weight(mb))
            mm = tuple(a + b for a, b in zip(m, mb))
            base = _diagonal(ch_pi(mm))
            shifted = LaurentPoly(
                QZZ6, {(e[0], e[1] - s6, e[2] + s6): c for e, c in base.items()}
            )
            terms.append((f * g).extend(QZZ6) * shifted)
    return poly_sum(terms, QZZ6)


def ch_bigc(params: CoinvariantParams) -> LaurentPoly:
    """ch_{q,z} L_l^{(k)} / B_N = sum_m F_{(0..0,N),m} K^{(k)}_{l,m} ch pi_m."""
    _need_N(params)
    M = params.big_M
    terms = []
    for m in _support(M):
        f = f_coeff(M, m)
        K = restricted_kostka(params.k, params.l, m)
        if f and K:
            terms.append(_lift_q(f * K, QZ) * ch_pi(m))
    return poly_sum(terms, QZ)


def kappa(l: int, M: Sequence[int]) -> LaurentPoly:
    """sum_m F_{M,m}(q) K_{l,m}(q) ch pi_m with unrestricted Kostka."""
    M = as_composition(M)
    terms = []
    for m in _support(M):
        f = f_coeff(M, m)
        if not f:
            continue
        K = unrestricted_kostka(l, m)
        if K:
            terms.append(_lift_q(f * K, QZ) * ch_pi(m))
    return poly_sum(terms, QZ)


def ch_bigc_alternating(params: CoinvariantParams) -> LaurentPoly:
    """The alternating-sum form of :func:`ch_bigc` in terms of :func:`kappa`."""
    _need_N(params)
    M = params.big_M
    out = QZ.zero()
    for idx, sign, expo in alternating_terms(params.k, params.l, weight(M)):
        out = out + sign * kappa(idx, M).shift(q=expo)
    return out


def ch_mixc(params: CoinvariantParams) -> LaurentPoly:
    """ch_{q,z} gr L_l^{(k)} / Y_{M,Mbar}: z tracks the full h-eigenvalue."""
    if params.M is None or params.Mbar is None:
        raise ValueError("ch_mixc needs M and Mbar")
    k, l, M, Mbar = params.k, params.l, params.M, params.Mbar
    terms = []
    for m in _support(M):
        f = f_coeff(M, m)
        if not f:
            continue
        for mb in _support(Mbar):
            g = f_coeff(Mbar, mb)
            if not g:
                continue
            K = restricted_kostka(k, l, tuple(a + b for a, b in zip(m, mb)))
            if K:
                terms.append(_lift_q(f * g * K, QZ).shift(z=weight(m) - weight(mb)))
    return poly_sum(terms, QZ)


def _need_N(params: CoinvariantParams):
    if params.N is None:
        raise ValueError("this character needs N")
