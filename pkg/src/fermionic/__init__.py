"""Fermionic formulas for sl2 coinvariants and fusion products, with a
brute-force linear-algebra oracle to check them."""

from __future__ import annotations

from .algebra import DEFAULT_PRIME, Q, QZ, QZZ, QZZ6, LaurentPoly, ModInt, Ring
from .characters import (
    CoinvariantParams,
    ch_bigc,
    ch_bigc_alternating,
    ch_mixc,
    ch_pi,
    ch_vm,
    ch_vmmbar,
    chi,
    kappa,
)
from .kostka import alternating_sum_kostka, restricted_kostka, unrestricted_kostka
from .qcomb import f_coeff, multinomial_expansion, q_binomial
from .verlinde import VerlindeElt, dim_bigc, dim_mixc

__all__ = [
    "DEFAULT_PRIME",
    "Q",
    "QZ",
    "QZZ",
    "QZZ6",
    "LaurentPoly",
    "ModInt",
    "Ring",
    "CoinvariantParams",
    "ch_bigc",
    "ch_bigc_alternating",
    "ch_mixc",
    "ch_pi",
    "ch_vm",
    "ch_vmmbar",
    "chi",
    "kappa",
    "alternating_sum_kostka",
    "restricted_kostka",
    "unrestricted_kostka",
    "f_coeff",
    "multinomial_expansion",
    "q_binomial",
    "VerlindeElt",
    "dim_bigc",
    "dim_mixc",
]
