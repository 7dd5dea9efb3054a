from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermionic.algebra import Q
from fermionic.kostka import (
    alternating_sum_kostka,
    fermionic_summands,
    restricted_kostka,
    stable_level,
    unrestricted_kostka,
)
from fermionic.qcomb import weight
from fermionic.verlinde import product_of_basis

q = Q.gen("q")


def test_restricted_examples():
    assert restricted_kostka(1, 1, (1,)) == Q.one()
    assert restricted_kostka(1, 0, (2,)) == q
    assert restricted_kostka(1, 1, (0,)).is_zero()
    with pytest.raises(ValueError):
        restricted_kostka(1, 2, (1,))


def test_summand_data():
    (s,) = fermionic_summands(1, 0, (2,))
    assert s.n == (1,) and s.c == 1 and s.vacancies == (0,)
    dead = [s for s in fermionic_summands(3, 0, (0, 0, 2)) if s.n == (3, 0, 0)]
    assert dead[0].vacancies == (-4, -2, 0)
    assert dead[0].vanishes and dead[0].value().is_zero()


def test_unrestricted_examples():
    assert unrestricted_kostka(0, (2,)) == q
    assert unrestricted_kostka(0, (2,), level=2) == unrestricted_kostka(0, (2,), level=3)
    for m in [(1,), (2, 1), (0, 1, 1)]:
        assert unrestricted_kostka(weight(m), m) == Q.one()
        assert unrestricted_kostka(weight(m) + 1, m).is_zero()


def test_alternating_examples():
    assert alternating_sum_kostka(1, 0, (2,)) == q
    for k in range(1, 4):
        assert alternating_sum_kostka(k, 0, (0,) * k) == Q.one()
    assert alternating_sum_kostka(2, 2, (0, 2)) == restricted_kostka(2, 2, (0, 2))


def comps(k, total):
    return [c for c in product(range(total + 1), repeat=k) if sum(c) <= total]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_one_equals_verlinde(k):
    for m in comps(k, 4):
        ver = product_of_basis(k, m)
        for l in range(k + 1):
            assert restricted_kostka(k, l, m).specialize({"q": 1}) == ver.coeff(l)


def test_stability():
    for k in range(1, 4):
        for m in comps(k, 3):
            for l in range(weight(m) + 1):
                base = stable_level(l, m)
                val = restricted_kostka(base, l, m + (0,) * (base - k)) if base >= k else None
                if val is None:
                    continue
                for extra in (1, 2):
                    kk = base + extra
                    assert restricted_kostka(kk, l, m + (0,) * (kk - k)) == val


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k), st.lists(st.integers(0, 2), min_size=k, max_size=k))))
def test_kostka_properties(args):
    k, l, m = args
    K = restricted_kostka(k, l, m)
    if (weight(m) - l) % 2 or l > weight(m):
        assert K.is_zero()
    if not K.is_zero():
        assert K.min_coefficient() > 0
        assert K.coeff(q=0) in (0, 1)
    assert K == alternating_sum_kostka(k, l, m)
