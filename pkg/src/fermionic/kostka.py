"""Level-restricted Kostka polynomials through their fermionic sum.

The unrestricted polynomial is obtained by taking the level large enough
that the restriction never bites, which is checked by the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import Q, LaurentPoly, poly_sum
from .qcomb import as_composition, compositions_of_weight, q_binomial, weight


@dataclass(frozen=True)
class FermionicSummand:
    n: tuple[int, ...]
    c: int
    vacancies: tuple[int, ...]

    @property
    def vanishes(self) -> bool:
        return any(p < 0 for p in self.vacancies)

    def value(self) -> LaurentPoly:
        if self.vanishes:
            return Q.zero()
        out = LaurentPoly(Q, {(self.c,): 1})
        for p, n in zip(self.vacancies, self.n):
            out = out * q_binomial(p + n, n)
        return out


def fermionic_summands(k: int, l: int, m: Sequence[int]) -> Iterator[FermionicSummand]:
    """All n with 2|n| = |m| - l, with quadratic form and vacancy numbers."""
    m = as_composition(m, k)
    excess = weight(m) - l
    if excess < 0 or excess % 2:
        return
    v = [max(a - k + l, 0) for a in range(1, k + 1)]
    # sum_b min(a,b) m_b, accumulated once
    Am = [sum(min(a, b) * m[b - 1] for b in range(1, k + 1)) for a in range(1, k + 1)]
    for n in compositions_of_weight(excess // 2, k):
        An = [sum(min(a, b) * n[b - 1] for b in range(1, k + 1)) for a in range(1, k + 1)]
        c = sum(n[a] * An[a] for a in range(k)) + sum(v[a] * n[a] for a in range(k))
        p = tuple(Am[a] - 2 * An[a] - v[a] for a in range(k))
        yield FermionicSummand(n, c, p)


@lru_cache(maxsize=None)
def _restricted(k: int, l: int, m: tuple[int, ...]) -> LaurentPoly:
    return poly_sum((s.value() for s in fermionic_summands(k, l, m)), Q)


def restricted_kostka(k: int, l: int, m: Sequence[int]) -> LaurentPoly:
    """K^{(k)}_{l,m}(q)."""
    if k < 1 or not 0 <= l <= k:
        raise ValueError(f"need k >= 1 and 0 <= l <= k, got k={k}, l={l}")
    return _restricted(k, l, as_composition(m, k))


def stable_level(l: int, m: Sequence[int]) -> int:
    """A level at which the restricted polynomial no longer depends on k."""
    m = _trim(m)
    return max(l, weight(m), len(m), 1)


def _trim(m: Sequence[int]) -> tuple[int, ...]:
    m = as_composition(m)
    while m and m[-1] == 0:
        m = m[:-1]
    return m


def unrestricted_kostka(l: int, m: Sequence[int], level: int | None = None) -> LaurentPoly:
    """K_{l,m}(q), evaluated as K^{(k*)}_{l,m} at a stable level k*."""
    if l < 0:
        raise ValueError("l must be non-negative")
    m = _trim(m)
    if l > weight(m):
        return Q.zero()
    k = stable_level(l, m) if level is None else level
    if k < stable_level(l, m):
        raise ValueError(f"level {k} is below the stable level {stable_level(l, m)}")
    return _restricted(k, l, as_composition(m, k))


def alternating_sum_kostka(k: int, l: int, m: Sequence[int]) -> LaurentPoly:
    """sum_i q^{(k+2)i^2+(l+1)i} K_{2(k+2)i+l,m} - sum_{i>0} q^{(k+2)i^2-(l+1)i} K_{2(k+2)i-l-2,m}."""
    if not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k, got k={k}, l={l}")
    total = weight(_trim(m))
    out = Q.zero()
    for idx, sign, expo in alternating_terms(k, l, total):
        out = out + sign * unrestricted_kostka(idx, m).shift(q=expo)
    return out


def alternating_terms(k: int, l: int, max_index: int) -> Iterator[tuple[int, int, int]]:
    """(index, sign, q-exponent) of the non-vanishing alternating-sum terms."""
    i = 0
    while 2 * (k + 2) * i + l <= max_index:
        yield 2 * (k + 2) * i + l, 1, (k + 2) * i * i + (l + 1) * i
        i += 1
    i = 1
    while 2 * (k + 2) * i - l - 2 <= max_index:
        yield 2 * (k + 2) * i - l - 2, -1, (k + 2) * i * i - (l + 1) * i
        i += 1
