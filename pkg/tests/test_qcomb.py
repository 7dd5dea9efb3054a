from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermionic.algebra import Q
from fermionic.qcomb import (
    compositions_below,
    f_coeff,
    f_coeff_at_one,
    lambda_partial,
    multinomial_expansion,
    q_binomial,
    weight,
)

q = Q.gen("q")


def test_q_binomial_examples():
    assert q_binomial(5, 0) == Q.one()
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binomial(2, 3).is_zero()
    assert q_binomial(-1, 0).is_zero()
    assert q_binomial(3, -1).is_zero()


def test_q_binomial_counts_partitions_in_a_box():
    # coefficient of q^j in [m, n] counts partitions of j inside an n x (m-n) box
    for m in range(7):
        for n in range(m + 1):
            counts = {}
            for parts in product(range(m - n + 1), repeat=n):
                if list(parts) == sorted(parts):
                    counts[sum(parts)] = counts.get(sum(parts), 0) + 1
            assert q_binomial(m, n).terms == {(j,): c for j, c in counts.items()}


@given(st.integers(0, 20), st.integers(0, 20))
def test_symmetry(m, n):
    if n <= m:
        assert q_binomial(m, n) == q_binomial(m, m - n)


@given(st.integers(1, 20), st.integers(1, 20))
def test_pascal(m, n):
    assert q_binomial(m, n) == q_binomial(m - 1, n - 1) + q**n * q_binomial(m - 1, n)


def test_weight_and_lambda():
    assert weight((0, 0, 0)) == 0
    assert weight((1, 1)) == 3
    assert weight((2, 0, 1)) == 5
    assert lambda_partial((1, 1)) == (2, 1)
    assert lambda_partial((0, 0)) == (0, 0)
    assert lambda_partial((2, 0, 1)) == (3, 1, 1)


def test_f_coeff_examples():
    assert f_coeff((1,), (1,)) == Q.one()
    assert f_coeff((2,), (1,)) == 1 + q
    assert f_coeff((2,), (3,)).is_zero()
    with pytest.raises(ValueError):
        f_coeff((1, 0), (1,))


def test_multinomial_examples():
    assert multinomial_expansion((1,)) == {(0,): 1, (1,): 1}
    assert multinomial_expansion((2,)) == {(0,): 1, (1,): 2, (2,): 1}
    assert multinomial_expansion((0, 1)) == {(0, 0): 1, (1, 0): 1, (0, 1): 1}


small_M = st.integers(1, 3).flatmap(lambda k: st.lists(st.integers(0, 2), min_size=k, max_size=k)).map(tuple)


@given(small_M)
def test_f_support_and_positivity(M):
    lam = lambda_partial(M)
    below = set(compositions_below(M))
    for m in product(range(sum(M) + 2), repeat=len(M)):
        f = f_coeff(M, m)
        inside = all(a <= b for a, b in zip(lambda_partial(m), lam))
        assert (m in below) == inside
        if not inside:
            assert f.is_zero()
        else:
            assert f.min_coefficient() > 0
        assert f_coeff_at_one(M, m) == f.specialize({"q": 1})
