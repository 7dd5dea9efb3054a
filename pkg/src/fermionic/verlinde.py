"""The level-k sl2 Verlinde ring and the coinvariant dimension formulas."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .qcomb import as_composition


@lru_cache(maxsize=None)
def _structure(k: int, l1: int, l2: int) -> tuple[int, ...]:
    lo = abs(l1 - l2)
    hi = min(l1 + l2, 2 * k - l1 - l2)
    return tuple(range(lo, hi + 1, 2))


@dataclass(frozen=True)
class VerlindeElt:
    """sum_l coeffs[l] * [l] in the level-k Verlinde ring."""

    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("level must be non-negative")
        if len(self.coeffs) != self.k + 1:
            raise ValueError(f"need {self.k + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def basis(cls, k: int, l: int) -> VerlindeElt:
        if not 0 <= l <= k:
            raise ValueError(f"basis index {l} outside 0..{k}")
        return cls(k, tuple(int(i == l) for i in range(k + 1)))

    @classmethod
    def unit(cls, k: int) -> VerlindeElt:
        return cls.basis(k, 0)

    @classmethod
    def from_dict(cls, k: int, d: dict[int, int]) -> VerlindeElt:
        c = [0] * (k + 1)
        for l, v in d.items():
            c[l] += v
        return cls(k, tuple(c))

    def _same_level(self, other: VerlindeElt):
        if not isinstance(other, VerlindeElt):
            raise TypeError("expected VerlindeElt")
        if other.k != self.k:
            raise ValueError(f"level mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        self._same_level(other)
        return VerlindeElt(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, n: int):
        return VerlindeElt(self.k, tuple(n * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._same_level(other)
        out = [0] * (self.k + 1)
        for l1, a in enumerate(self.coeffs):
            if not a:
                continue
            for l2, b in enumerate(other.coeffs):
                if not b:
                    continue
                for l3 in _structure(self.k, l1, l2):
                    out[l3] += a * b
        return VerlindeElt(self.k, tuple(out))

    def __pow__(self, n: int):
        out = VerlindeElt.unit(self.k)
        for _ in range(n):
            out = out * self
        return out

    def coeff(self, l: int) -> int:
        return verlinde_coeff(self, l)

    def __str__(self):
        parts = [f"{c}[{l}]" if c != 1 else f"[{l}]" for l, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def verlinde_mul(a: VerlindeElt, b: VerlindeElt) -> VerlindeElt:
    return a * b


def verlinde_coeff(a: VerlindeElt, l: int) -> int:
    """(a : [l])_k."""
    if not 0 <= l <= a.k:
        raise ValueError(f"index {l} outside 0..{a.k}")
    return a.coeffs[l]


def _check(k: int, l: int):
    if k < 0 or not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k, got k={k}, l={l}")


def dim_bigc(k: int, l: int, N: int) -> int:
    """((sum_j (j+1)[j])^N : [l])_k."""
    _check(k, l)
    if N < 0:
        raise ValueError("N must be non-negative")
    base = VerlindeElt(k, tuple(j + 1 for j in range(k + 1)))
    return (base**N).coeff(l)


def dim_mixc(k: int, l: int, M: Sequence[int], Mbar: Sequence[int]) -> int:
    """(prod_a ([0]+...+[a])^{M_a + Mbar_a} : [l])_k."""
    _check(k, l)
    M = as_composition(M)
    Mbar = as_composition(Mbar)
    if len(M) != k or len(Mbar) != k:
        raise ValueError(f"M and Mbar must have length k={k}")
    out = VerlindeElt.unit(k)
    for a in range(1, k + 1):
        box = VerlindeElt(k, tuple(int(j <= a) for j in range(k + 1)))
        for _ in range(M[a - 1] + Mbar[a - 1]):
            out = out * box
    return out.coeff(l)


def product_of_basis(k: int, m: Sequence[int]) -> VerlindeElt:
    """[1]^{m_1} ... [k]^{m_k}."""
    out = VerlindeElt.unit(k)
    for a, power in enumerate(m, start=1):
        if power and a > k:
            raise ValueError(f"[{a}] is not in the level-{k} ring")
        for _ in range(power):
            out = out * VerlindeElt.basis(k, a)
    return out
