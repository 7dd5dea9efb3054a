"""Exact linear algebra over Z/pZ (numpy + kernels) or Q (Fractions)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from ..algebra import DEFAULT_PRIME


class PrimeField:
    """Z/pZ with int64 numpy arrays."""

    exact = False

    def __init__(self, p: int = DEFAULT_PRIME):
        if not 2 < p < 2**31:
            raise ValueError("prime must fit the int64 kernels (p < 2^31)")
        self.p = int(p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def array(self, a) -> np.ndarray:
        a = np.asarray(a)
        if a.dtype == object:
            return np.vectorize(self.scalar, otypes=[np.int64])(a)
        return np.mod(a.astype(np.int64), self.p)

    def scalar(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator % self.p) * pow(x.denominator % self.p, -1, self.p) % self.p
        return int(x) % self.p

    def power(self, x: int, n: int) -> int:
        return pow(int(x), n, self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] > 2**15:
            raise ValueError("inner dimension too large for the split product")
        return _kernels.matmul_mod(np.ascontiguousarray(a), np.ascontiguousarray(b), self.p)

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return (a * (int(c) % self.p)) % self.p

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # entries of generator matrices are small, but reduce anyway
        return np.mod(np.kron(a, b), self.p)

    def rank(self, mat: np.ndarray) -> int:
        if mat.size == 0:
            return 0
        return int(_kernels.rank_mod(np.ascontiguousarray(mat), self.p))

    def space(self, n: int) -> Subspace:
        return ModpSubspace(self, n)

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a)


class RationalField:
    """Q with numpy object arrays of Fractions; for small ground-truth runs."""

    exact = True
    p = None

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=object)
        return np.vectorize(Fraction, otypes=[object])(a) if a.size else a.astype(object)

    def scalar(self, x) -> Fraction:
        return Fraction(x)

    def power(self, x, n: int) -> Fraction:
        return Fraction(x) ** n

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=np.int64))

    def identity(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def matmul(self, a, b):
        return a.dot(b)

    def scale(self, a, c):
        return a * Fraction(c)

    def add(self, a, b):
        return a + b

    def kron(self, a, b):
        return np.kron(a, b)

    def rank(self, mat) -> int:
        if mat.size == 0:
            return 0
        s = RationalSubspace(self, mat.shape[1])
        s.add(mat)
        return s.dim

    def space(self, n: int) -> Subspace:
        return RationalSubspace(self, n)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a.flat)


class Subspace:
    """A subspace of F^n kept as rows in semi-echelon form.

    Rows are only ever appended, so the span of the first ``j`` rows never
    changes; filtration levels are prefixes.
    """

    field: PrimeField | RationalField
    n: int
    dim: int

    def add(self, vectors) -> np.ndarray:
        """Insert rows; return, per row, its new basis index or -1."""
        raise NotImplementedError

    def rows(self, upto: int | None = None) -> np.ndarray:
        raise NotImplementedError

    def copy(self) -> Subspace:
        raise NotImplementedError

    def contains(self, vectors) -> bool:
        trial = self.copy()
        placed = trial.add(vectors)
        return bool(np.all(placed < 0))


class ModpSubspace(Subspace):
    def __init__(self, field: PrimeField, n: int):
        self.field = field
        self.n = n
        self._rows = np.zeros((max(n, 1), n), dtype=np.int64)
        self._piv = np.zeros(max(n, 1), dtype=np.int64)
        self.dim = 0

    def add(self, vectors) -> np.ndarray:
        v = np.ascontiguousarray(np.atleast_2d(vectors), dtype=np.int64)
        if v.shape[0] == 0 or self.n == 0:
            return np.full(v.shape[0], -1, dtype=np.int64)
        count, placed = _kernels.insert_rows(self._rows, self._piv, self.dim, v, self.field.p)
        self.dim = int(count)
        return placed

    def rows(self, upto=None) -> np.ndarray:
        return self._rows[: self.dim if upto is None else upto]

    def copy(self) -> ModpSubspace:
        out = ModpSubspace(self.field, self.n)
        out._rows = self._rows.copy()
        out._piv = self._piv.copy()
        out.dim = self.dim
        return out


class RationalSubspace(Subspace):
    def __init__(self, field: RationalField, n: int):
        self.field = field
        self.n = n
        self._rows: list[list[Fraction]] = []
        self._piv: list[int] = []
        self.dim = 0

    def add(self, vectors) -> np.ndarray:
        vectors = np.atleast_2d(vectors)
        placed = np.full(vectors.shape[0], -1, dtype=np.int64)
        for ci, vec in enumerate(vectors):
            v = [Fraction(x) for x in vec]
            for row, c in zip(self._rows, self._piv):
                f = v[c]
                if f:
                    for j in range(c, self.n):
                        if row[j]:
                            v[j] -= f * row[j]
            lead = next((j for j, x in enumerate(v) if x), -1)
            if lead < 0:
                continue
            inv = 1 / v[lead]
            self._rows.append([x * inv for x in v])
            self._piv.append(lead)
            placed[ci] = self.dim
            self.dim += 1
        return placed

    def rows(self, upto=None) -> np.ndarray:
        rows = self._rows[: self.dim if upto is None else upto]
        out = np.empty((len(rows), self.n), dtype=object)
        for i, r in enumerate(rows):
            out[i, :] = r
        return out

    def copy(self) -> RationalSubspace:
        out = RationalSubspace(self.field, self.n)
        out._rows = [list(r) for r in self._rows]
        out._piv = list(self._piv)
        out.dim = self.dim
        return out


def make_field(prime: int | None):
    """``None`` selects exact rationals."""
    return RationalField() if prime is None else PrimeField(prime)
