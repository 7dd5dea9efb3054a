from __future__ import annotations

import numpy as np
import pytest

from fermionic.oracle.linalg import PrimeField
from fermionic.oracle.modules import (
    SL3_GENERATORS,
    build_pi_sum,
    build_pibar_sum,
    build_sl2_irrep,
    build_sl3_sym,
    build_sl3_sym_dual,
    build_varpi,
    check_brackets,
)

F = PrimeField()


def span_dim(vectors, ops, n):
    """Dimension of the span of ``vectors`` closed under ``ops``."""
    space = F.space(n)
    space.add(F.array(np.atleast_2d(vectors)))
    frontier = 0
    while frontier < space.dim:
        block = space.rows()[frontier : space.dim].copy()
        frontier = space.dim
        for op in ops:
            space.add(F.matmul(block, F.array(op.T.copy())))
    return space.dim


def test_sl2_irrep_small():
    pi0 = build_sl2_irrep(0)
    assert pi0.dim == 1 and not any(np.any(g) for g in pi0.generators.values())
    pi1 = build_sl2_irrep(1)
    assert sorted(np.diag(pi1.generators["h"])) == [-1, 1]
    assert np.array_equal(pi1.generators["e"], [[0, 0], [1, 0]])
    for l in range(6):
        check_brackets(build_sl2_irrep(l))
    with pytest.raises(ValueError):
        build_sl2_irrep(-1)


def test_varpi():
    v0 = build_varpi(0)
    assert v0.dim == 1 and np.any(v0.cyclic)
    v1 = build_varpi(1)
    assert v1.dim == 5
    for x in "efh":
        assert not np.any((v1.generators[x + "'"] + v1.generators[x + "''"]) @ v1.cyclic)
    second = [v1.generators[x + "''"] for x in "efh"]
    assert span_dim(v1.cyclic, second, 5) == 5
    for k in range(4):
        v = build_varpi(k)
        check_brackets(v)
        assert v.dim == sum((l + 1) ** 2 for l in range(k + 1))
        assert span_dim(v.cyclic, [v.generators[x + "''"] for x in "efh"], v.dim) == v.dim


def test_pi_sums():
    p2 = build_pi_sum(2)
    assert sorted(p2.weight_ops["htilde"]) == [0, 1, 1, 2, 2, 2]
    assert sorted(build_pibar_sum(2).weight_ops["htilde"]) == [-2, -2, -2, -1, -1, 0]
    p1 = build_pi_sum(1)
    assert np.any(p1.generators["e"] @ p1.cyclic)
    assert not np.any(p1.generators["f"] @ p1.cyclic)
    assert not np.any(build_pibar_sum(1).generators["e"] @ build_pibar_sum(1).cyclic)
    sl2 = [p2.generators[x] for x in "efh"]
    assert span_dim(p2.cyclic, sl2, 6) == 6
    for m in range(4):
        check_brackets(build_pi_sum(m))
        check_brackets(build_pibar_sum(m))
        ht = build_pi_sum(m).generators["htilde"]
        for x in "efh":
            g = build_pi_sum(m).generators[x]
            assert not np.any(ht @ g - g @ ht)


def test_sl3_modules():
    P1 = build_sl3_sym(1)
    assert P1.dim == 3
    e12, e13, e23 = (P1.generators[x] for x in ("e12", "e13", "e23"))
    v = P1.cyclic
    assert not np.any(e12 @ v)
    assert not np.any(e13 @ e13 @ v)
    assert build_sl3_sym(2).dim == 6
    for m in range(4):
        for mod in (build_sl3_sym(m), build_sl3_sym_dual(m)):
            check_brackets(mod)
            assert mod.dim == (m + 1) * (m + 2) // 2
            g = mod.generators
            for i in ("e21", "e31", "e32"):
                assert not np.any(g[i] @ mod.cyclic)
            gens = [g[x] for x in SL3_GENERATORS]
            assert span_dim(mod.cyclic, gens, mod.dim) == mod.dim
        g, v = build_sl3_sym(m).generators, build_sl3_sym(m).cyclic
        for a in range(m + 2):
            b = m + 1 - a
            w = v
            for _ in range(b):
                w = g["e23"] @ w
            for _ in range(a):
                w = g["e13"] @ w
            assert not np.any(w)


def test_broken_brackets_are_detected():
    mod = build_sl2_irrep(2)
    bad = type(mod)(mod.name, mod.dim, {**mod.generators, "f": mod.generators["f"] * 2}, mod.cyclic, mod.weight_ops)
    with pytest.raises(AssertionError):
        check_brackets(bad)
