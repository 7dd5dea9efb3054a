"""Explicit integer matrix models of the small sl2 and sl3 modules used by the
oracle.

Matrices act on column vectors in a fixed weight basis.  Weight operators
are stored as their diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np


@dataclass(frozen=True, eq=False)
class RepModule:
    name: str
    dim: int
    generators: dict[str, np.ndarray]
    cyclic: np.ndarray
    weight_ops: dict[str, np.ndarray]
    algebra: str = "sl2"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("module dimension must be positive")
        for name, g in self.generators.items():
            if g.shape != (self.dim, self.dim):
                raise ValueError(f"generator {name} has shape {g.shape}")
        for name, w in self.weight_ops.items():
            if w.shape != (self.dim,):
                raise ValueError(f"weight operator {name} must be a diagonal of length {self.dim}")
        if self.cyclic.shape != (self.dim,) or not np.any(self.cyclic):
            raise ValueError("cyclic vector must be a nonzero vector of length dim")

    def weight_matrix(self, name: str) -> np.ndarray:
        return np.diag(self.weight_ops[name])


def _bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _sl2_matrices(l: int):
    n = l + 1
    e = np.zeros((n, n), dtype=np.int64)
    f = np.zeros((n, n), dtype=np.int64)
    for j in range(l):
        e[j + 1, j] = 1
    for j in range(1, n):
        f[j - 1, j] = j * (l - j + 1)
    h = np.diag(np.arange(-l, l + 1, 2, dtype=np.int64))
    return e, f, h


@lru_cache(maxsize=None)
def build_sl2_irrep(l: int) -> RepModule:
    """pi_l with basis v_0 (lowest) ... v_l; e v_j = v_{j+1}."""
    if l < 0:
        raise ValueError("l must be non-negative")
    e, f, h = _sl2_matrices(l)
    u = np.zeros(l + 1, dtype=np.int64)
    u[0] = 1
    return RepModule(
        f"pi_{l}", l + 1, {"e": e, "f": f, "h": h}, u, {"h": np.diag(h).copy()}
    )


def _block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    i = 0
    for b in blocks:
        s = b.shape[0]
        out[i : i + s, i : i + s] = b
        i += s
    return out


@lru_cache(maxsize=None)
def build_varpi(k: int) -> RepModule:
    """varpi^(k) = sum_{l<=k} dual(pi_l) (x) pi_l over sl2 + sl2.

    Primed generators act on the dual factor by -x^T, double-primed on the
    second factor; the cyclic vector is the sum of the identity tensors.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    gens: dict[str, list[np.ndarray]] = {
        f"{x}{s}": [] for x in "efh" for s in ("'", "''")
    }
    cyc = []
    for l in range(k + 1):
        mats = dict(zip("efh", _sl2_matrices(l)))
        eye = np.eye(l + 1, dtype=np.int64)
        for x, m in mats.items():
            gens[x + "'"].append(np.kron(-m.T, eye))
            gens[x + "''"].append(np.kron(eye, m))
        cyc.append(eye.reshape(-1))
    generators = {name: _block_diag(blocks) for name, blocks in gens.items()}
    weights = {"h'": np.diag(generators["h'"]).copy(), "h''": np.diag(generators["h''"]).copy()}
    cyclic = np.concatenate(cyc)
    return RepModule(
        f"varpi_{k}", len(cyclic), generators, cyclic, weights, "sl2+sl2", {"k": k}
    )


def _pi_sum(m: int, bar: bool) -> RepModule:
    if m < 0:
        raise ValueError("m must be non-negative")
    gens: dict[str, list[np.ndarray]] = {"e": [], "f": [], "h": []}
    cyc, ht = [], []
    for l in range(m + 1):
        for x, mat in zip("efh", _sl2_matrices(l)):
            gens[x].append(mat)
        u = np.zeros(l + 1, dtype=np.int64)
        u[-1 if bar else 0] = 1
        cyc.append(u)
        ht.append(np.full(l + 1, -l if bar else l, dtype=np.int64))
    generators = {x: _block_diag(b) for x, b in gens.items()}
    weights = {"h": np.diag(generators["h"]).copy(), "htilde": np.concatenate(ht)}
    # central on each summand; exposed so ideals may use it
    generators["htilde"] = np.diag(weights["htilde"])
    cyclic = np.concatenate(cyc)
    name = f"pibar^({m})" if bar else f"pi^({m})"
    return RepModule(name, len(cyclic), generators, cyclic, weights, "sl2", {"m": m, "bar": bar})


@lru_cache(maxsize=None)
def build_pi_sum(m: int) -> RepModule:
    """pi^(m) = sum_{l<=m} pi_l, cyclic vector sum of lowest weight vectors, htilde = l."""
    return _pi_sum(m, bar=False)


@lru_cache(maxsize=None)
def build_pibar_sum(m: int) -> RepModule:
    """The same space with highest weight vectors and htilde = -l."""
    return _pi_sum(m, bar=True)


SL3_GENERATORS = ("e12", "e13", "e23", "e21", "e31", "e32", "h12", "h23")


def _sym_basis(m: int) -> list[tuple[int, int, int]]:
    return [a for a in product(range(m + 1), repeat=3) if sum(a) == m]


def _sl3_sym(m: int, dual: bool) -> RepModule:
    if m < 0:
        raise ValueError("m must be non-negative")
    basis = _sym_basis(m)
    index = {a: i for i, a in enumerate(basis)}
    n = len(basis)
    units = {}
    for a in range(3):
        for b in range(3):
            mat = np.zeros((n, n), dtype=np.int64)
            # natural: e_ab = x_a d/dx_b;  dual: e_ab = -y_b d/dy_a
            src, dst, sign = (b, a, 1) if not dual else (a, b, -1)
            for i, mono in enumerate(basis):
                c = mono[src]
                if c:
                    new = list(mono)
                    new[src] -= 1
                    new[dst] += 1
                    mat[index[tuple(new)], i] = sign * c
            units[(a + 1, b + 1)] = mat
    generators = {
        f"e{a}{b}": units[(a, b)] for a in range(1, 4) for b in range(1, 4) if a != b
    }
    generators["h12"] = units[(1, 1)] - units[(2, 2)]
    generators["h23"] = units[(2, 2)] - units[(3, 3)]
    cyclic = np.zeros(n, dtype=np.int64)
    cyclic[index[(m, 0, 0) if dual else (0, 0, m)]] = 1
    weights = {h: np.diag(generators[h]).copy() for h in ("h12", "h23")}
    name = f"Pibar_{m}" if dual else f"Pi_{m}"
    return RepModule(name, n, generators, cyclic, weights, "sl3", {"m": m, "dual": dual})


@lru_cache(maxsize=None)
def build_sl3_sym(m: int) -> RepModule:
    """Pi_m = Sym^m(C^3); cyclic vector x_3^m is a lowest weight vector."""
    return _sl3_sym(m, dual=False)


@lru_cache(maxsize=None)
def build_sl3_sym_dual(m: int) -> RepModule:
    """Pibar_m = Sym^m of the dual; cyclic vector y_1^m."""
    return _sl3_sym(m, dual=True)


def check_brackets(mod: RepModule) -> None:
    """Raise AssertionError unless the generators satisfy their Lie brackets."""
    g = mod.generators
    if mod.algebra in ("sl2", "sl2+sl2"):
        suffixes = ("",) if mod.algebra == "sl2" else ("'", "''")
        for s in suffixes:
            e, f, h = g["e" + s], g["f" + s], g["h" + s]
            assert np.array_equal(_bracket(h, e), 2 * e)
            assert np.array_equal(_bracket(h, f), -2 * f)
            assert np.array_equal(_bracket(e, f), h)
        if mod.algebra == "sl2+sl2":
            for x in "efh":
                for y in "efh":
                    assert not np.any(_bracket(g[x + "'"], g[y + "''"]))
    elif mod.algebra == "sl3":
        n = mod.dim
        # rebuild e_aa from the Cartan: e11+e22+e33 acts as +-m on Sym^m
        m = mod.meta["m"]
        total = (-m if mod.meta["dual"] else m) * np.eye(n, dtype=np.int64)
        h12, h23 = g["h12"], g["h23"]
        # e11 = (total + 2 h12 + h23)/3 etc.
        e11 = (total + 2 * h12 + h23) // 3
        e22 = (total - h12 + h23) // 3
        e33 = (total - h12 - 2 * h23) // 3
        assert np.array_equal(e11 - e22, h12) and np.array_equal(e22 - e33, h23)
        unit = {(1, 1): e11, (2, 2): e22, (3, 3): e33}
        for a in range(1, 4):
            for b in range(1, 4):
                if a != b:
                    unit[(a, b)] = g[f"e{a}{b}"]
        for (a, b), x in unit.items():
            for (c, d), y in unit.items():
                want = np.zeros((n, n), dtype=np.int64)
                if b == c:
                    want += unit[(a, d)]
                if d == a:
                    want -= unit[(c, b)]
                assert np.array_equal(_bracket(x, y), want), (a, b, c, d)
    else:
        raise ValueError(f"unknown algebra {mod.algebra!r}")
    for w in mod.weight_ops.values():
        wm = np.diag(w)
        for name, x in g.items():
            if name.startswith("h"):
                assert not np.any(_bracket(wm, x))
