"""q-binomials, compositions and the q-multinomial coefficients F_{M,m}(q)."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import Q, LaurentPoly

Composition = tuple[int, ...]


def as_composition(m: Sequence[int], k: int | None = None) -> Composition:
    """Validate ``m`` and optionally zero-pad it to length ``k``."""
    m = tuple(int(x) for x in m)
    if any(x < 0 for x in m):
        raise ValueError(f"composition entries must be non-negative: {m}")
    if k is not None:
        if len(m) > k:
            if any(m[k:]):
                raise ValueError(f"{m} has nonzero entries beyond length {k}")
            m = m[:k]
        m = m + (0,) * (k - len(m))
    return m


def weight(m: Sequence[int]) -> int:
    """|m| = sum_i i * m_i (1-based)."""
    return sum(i * x for i, x in enumerate(m, start=1))


def lambda_partial(m: Sequence[int]) -> tuple[int, ...]:
    """Suffix sums (lambda_1, ..., lambda_k), lambda_a = sum_{i>=a} m_i."""
    out = list(itertools.accumulate(reversed(m)))
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def _qbin_coeffs(m: int, n: int) -> tuple[int, ...]:
    if n < 0 or n > m:
        return ()
    if n == 0 or n == m:
        return (1,)
    # Pascal: [m, n] = [m-1, n-1] + q^n [m-1, n]
    a = _qbin_coeffs(m - 1, n - 1)
    b = _qbin_coeffs(m - 1, n)
    out = [0] * (n * (m - n) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + n] += c
    return tuple(out)


@lru_cache(maxsize=None)
def q_binomial(m: int, n: int) -> LaurentPoly:
    """The Gaussian binomial [m choose n]_q, zero unless 0 <= n <= m."""
    return LaurentPoly(Q, {(i,): c for i, c in enumerate(_qbin_coeffs(m, n))})


def q_binomial_at_one(m: int, n: int) -> int:
    return sum(_qbin_coeffs(m, n))


def _f_factors(M: Composition, m: Composition):
    if len(M) != len(m):
        raise ValueError(f"length mismatch: {M} vs {m}")
    lam = lambda_partial(M) + (0,)
    mu = lambda_partial(m) + (0,)
    k = len(M)
    expo = sum(mu[a + 1] * (lam[a] - mu[a]) for a in range(k - 1))
    pairs = [(lam[a] - mu[a + 1], mu[a] - mu[a + 1]) for a in range(k)]
    return expo, pairs


@lru_cache(maxsize=None)
def f_coeff(M: Composition, m: Composition) -> LaurentPoly:
    """F_{M,m}(q): the q-analogue of the coefficient of x^m in
    prod_a (1 + x_1 + ... + x_a)^{M_a}.

    Defined for arbitrary compositions; vanishes unless
    lambda_a(m) <= lambda_a(M) for every a.
    """
    M, m = tuple(M), tuple(m)
    expo, pairs = _f_factors(M, m)
    out = LaurentPoly(Q, {(expo,): 1})
    for top, bot in pairs:
        if bot < 0 or bot > top:
            return Q.zero()
        out = out * q_binomial(top, bot)
    return out


def f_coeff_at_one(M: Composition, m: Composition) -> int:
    _, pairs = _f_factors(tuple(M), tuple(m))
    out = 1
    for top, bot in pairs:
        out *= q_binomial_at_one(top, bot)
    return out


def multinomial_expansion(M: Sequence[int]) -> dict[Composition, int]:
    """Coefficients of prod_a (1 + x_1 + ... + x_a)^{M_a}, by direct expansion."""
    k = len(M)
    poly: dict[Composition, int] = {(0,) * k: 1}
    for a, power in enumerate(M, start=1):
        factor = [(0,) * k] + [tuple(int(i == j) for i in range(k)) for j in range(a)]
        for _ in range(power):
            nxt: dict[Composition, int] = {}
            for e, c in poly.items():
                for f in factor:
                    key = tuple(x + y for x, y in zip(e, f))
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
    return poly


def compositions_below(M: Sequence[int]) -> Iterator[Composition]:
    """All m with lambda_a(m) <= lambda_a(M) for every a: the support of F_{M,.}."""
    lam = lambda_partial(M)
    k = len(lam)

    def rec(a: int, tail: int, acc: list[int]):
        # choose m_a given tail = lambda_{a+1}(m)
        if a < 0:
            yield tuple(acc)
            return
        for x in range(lam[a] - tail + 1):
            acc[a] = x
            yield from rec(a - 1, tail + x, acc)
        acc[a] = 0

    yield from rec(k - 1, 0, [0] * k)


def compositions_of_weight(total: int, k: int) -> Iterator[Composition]:
    """All n in Z_{>=0}^k with |n| = sum_a a*n_a == total."""
    if total < 0:
        return

    def rec(a: int, rest: int, acc: list[int]):
        if a == 0:
            if rest == 0:
                yield tuple(acc)
            return
        for x in range(rest // a + 1):
            acc[a - 1] = x
            yield from rec(a - 1, rest - a * x, acc)
        acc[a - 1] = 0

    yield from rec(k, total, [0] * k)


def compositions_from_levels(levels: Sequence[int], k: int) -> Composition:
    """M_a = #{i : k_i = a}; entries equal to 0 are dropped."""
    out = [0] * k
    for x in levels:
        if not 0 <= x <= k:
            raise ValueError(f"level {x} outside 0..{k}")
        if x:
            out[x - 1] += 1
    return tuple(out)


def levels_from_composition(M: Sequence[int]) -> list[int]:
    """Inverse of ``compositions_from_levels``: sorted descending."""
    out = []
    for a in range(len(M), 0, -1):
        out += [a] * M[a - 1]
    return out
