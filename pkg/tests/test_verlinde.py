from __future__ import annotations

from itertools import product

import pytest

from fermionic.kostka import restricted_kostka
from fermionic.qcomb import compositions_below, f_coeff_at_one
from fermionic.characters import chi
from fermionic.verlinde import VerlindeElt, dim_bigc, dim_mixc, verlinde_coeff, verlinde_mul

B = VerlindeElt.basis


def test_mul_examples():
    assert verlinde_mul(B(1, 1), B(1, 1)) == B(1, 0)
    assert verlinde_mul(B(2, 1), B(2, 2)) == B(2, 1)
    assert verlinde_mul(B(2, 1), B(2, 1)) == B(2, 0) + B(2, 2)
    with pytest.raises(ValueError):
        B(1, 1) * B(2, 1)


def test_coeff_examples():
    a = B(1, 0) + 2 * B(1, 1)
    assert verlinde_coeff(a, 1) == 2
    assert verlinde_coeff(B(1, 0), 1) == 0
    assert verlinde_coeff(a * a, 0) == 5
    with pytest.raises(ValueError):
        verlinde_coeff(a, 2)


@pytest.mark.parametrize("k", range(5))
def test_ring_axioms_on_basis(k):
    basis = [B(k, l) for l in range(k + 1)]
    for x in basis:
        assert x * B(k, 0) == x
        for y in basis:
            xy = x * y
            assert xy == y * x
            assert set(xy.coeffs) <= {0, 1}
            for w in basis:
                assert (xy) * w == x * (y * w)


def test_dim_examples():
    assert dim_bigc(1, 0, 1) == 1
    assert dim_bigc(1, 1, 2) == 4
    for k in range(4):
        assert dim_bigc(k, 0, 0) == 1
    assert dim_mixc(1, 1, (1,), (0,)) == 1
    assert dim_mixc(1, 0, (1,), (1,)) == 2
    assert dim_mixc(2, 0, (0, 0), (0, 0)) == 1
    with pytest.raises(ValueError):
        dim_bigc(1, 2, 1)


def test_dim_bigc_expanded_form():
    for k in (1, 2):
        M_of = lambda N: (0,) * (k - 1) + (N,)
        for N in range(4):
            for l in range(k + 1):
                total = 0
                for m in compositions_below(M_of(N)):
                    K = restricted_kostka(k, l, m).specialize({"q": 1})
                    total += f_coeff_at_one(M_of(N), m) * K * chi(m).specialize({"q": 1, "z": 1})
                assert total == dim_bigc(k, l, N)


def test_dim_mixc_expanded_form():
    for k in (1, 2):
        comps = [c for c in product(range(5), repeat=k)]
        for M in comps:
            for Mb in comps:
                if sum(a * x for a, x in enumerate(M, 1)) + sum(a * x for a, x in enumerate(Mb, 1)) > 4:
                    continue
                for l in range(k + 1):
                    total = 0
                    for m in compositions_below(M):
                        for mb in compositions_below(Mb):
                            mm = tuple(a + b for a, b in zip(m, mb))
                            K = restricted_kostka(k, l, mm).specialize({"q": 1})
                            total += f_coeff_at_one(M, m) * f_coeff_at_one(Mb, mb) * K
                    assert total == dim_mixc(k, l, M, Mb)
