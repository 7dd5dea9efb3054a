from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fermionic.oracle import _kernels as K
from fermionic.oracle.linalg import PrimeField, RationalField

P = 2_147_483_647
SMALL_P = 1_073_741_827


def mats(rows, cols, p=P):
    return arrays(np.int64, (rows, cols), elements=st.integers(0, p - 1))


backends = [
    pytest.param((K.insert_rows_numpy, K.matmul_numpy, K.rank_numpy), id="numpy"),
    pytest.param(
        (K.insert_rows_numba, K.matmul_numba, K.rank_numba),
        id="numba",
        marks=pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba missing"),
    ),
]


def reference_rank(mat, p):
    # rank over Z/p by exact elimination on Python ints
    a = [[int(x) % p for x in row] for row in mat]
    r = 0
    for c in range(len(a[0]) if a else 0):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


@pytest.mark.parametrize("kernels", backends)
@given(data=st.data())
def test_kernels_match_python(kernels, data):
    insert, matmul, rank = kernels
    n = data.draw(st.integers(1, 6))
    a = data.draw(mats(n, n))
    b = data.draw(mats(n, n))
    want = [[sum(int(a[i, t]) * int(b[t, j]) for t in range(n)) % P for j in range(n)] for i in range(n)]
    assert matmul(a, b, P).tolist() == want
    # low-rank candidates exercise the reduction
    c = matmul(data.draw(mats(2 * n, 2)), data.draw(mats(2, n)), P)
    r = reference_rank(c, P)
    assert rank(c, P) == r
    rows = np.zeros((n, n), dtype=np.int64)
    piv = np.zeros(n, dtype=np.int64)
    count, placed = insert(rows, piv, 0, c, P)
    assert count == r == int(np.sum(placed >= 0))
    for i in range(count):
        assert rows[i, piv[i]] == 1 and not np.any(rows[i, : piv[i]])


def test_backends_agree_on_insertion():
    rng = np.random.default_rng(5)
    c = K.matmul_numpy(rng.integers(0, P, (40, 7)), rng.integers(0, P, (7, 30)), P)
    out = []
    for insert in (K.insert_rows_numpy, K.insert_rows_numba):
        rows = np.zeros((30, 30), dtype=np.int64)
        piv = np.zeros(30, dtype=np.int64)
        count, placed = insert(rows, piv, 0, c, P)
        out.append((count, placed.tolist(), rows[:count].tolist(), piv[:count].tolist()))
    assert out[0] == out[1]


def test_selected_backend_follows_flag():
    assert K.backend_name() in ("numba", "numpy")
    assert (K.insert_rows is K.insert_rows_numba) == K.USE_NUMBA


def test_prime_field_basics():
    F = PrimeField(SMALL_P)
    from fractions import Fraction

    assert F.scalar(Fraction(1, 2)) * 2 % SMALL_P == 1
    assert F.scalar(-1) == SMALL_P - 1
    s = F.space(3)
    assert s.add(F.array([[1, 2, 3], [2, 4, 6], [0, 0, 1]])).tolist() == [0, -1, 1]
    assert s.contains(F.array([[1, 2, 0]]))
    assert not s.contains(F.array([[0, 1, 0]]))
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)


def test_rational_field_matches_prime_field():
    rng = np.random.default_rng(3)
    a = rng.integers(-3, 4, (6, 5))
    Fq, Fp = RationalField(), PrimeField()
    assert Fq.rank(Fq.array(a)) == Fp.rank(Fp.array(a)) == np.linalg.matrix_rank(a)
