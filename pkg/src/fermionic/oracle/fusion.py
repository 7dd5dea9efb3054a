"""Filtered tensor products of evaluation modules and their graded pieces.

The current x (x) t^i acts on the tensor product of the factors as
sum_a zeta_a^i x^(a).  Only i < N is needed: on N evaluation points t has a
minimal polynomial of degree N, so higher currents add nothing new to any
filtration level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ..algebra import LaurentPoly, Ring
from .linalg import PrimeField, RationalField, Subspace
from .modules import RepModule


class OracleError(RuntimeError):
    pass


class ZetaCollision(OracleError, ValueError):
    pass


class WeightInvarianceError(OracleError):
    """A subspace that should be a sum of weight spaces is not."""


class OperatorNotExpressible(OracleError, ValueError):
    pass


class InconsistentMode(OracleError, ValueError):
    pass


Grading = Mapping[str, Fraction]


@dataclass(eq=False)
class FusionProblem:
    """Factors, evaluation points, acting generators and weight gradings.

    ``gradings`` maps a variable name to a rational combination of weight
    operators, e.g. ``{"z": {"h": Fraction(1, 2)}}``.
    """

    factors: Sequence[RepModule]
    zetas: Sequence
    field: PrimeField | RationalField
    acting: Sequence[str]
    gradings: Mapping[str, Grading] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.zetas) != len(self.factors):
            raise ValueError("one evaluation point per factor")
        zs = [self.field.scalar(z) for z in self.zetas]
        if any(z == 0 for z in zs):
            raise ZetaCollision("evaluation points must be nonzero")
        if len(set(zs)) != len(zs):
            raise ZetaCollision("evaluation points must be pairwise distinct")
        self._zetas = zs
        for x in self.acting:
            for f in self.factors:
                if x not in f.generators:
                    raise OperatorNotExpressible(f"{x!r} is not a generator of {f.name}")
        for var, combo in self.gradings.items():
            for w in combo:
                for f in self.factors:
                    if w not in f.weight_ops:
                        raise ValueError(f"{f.name} has no weight operator {w!r}")
        self._currents: dict[tuple[str, int], np.ndarray] = {}
        self._weights = None

    @property
    def N(self) -> int:
        return len(self.factors)

    @property
    def dim(self) -> int:
        return int(np.prod([f.dim for f in self.factors]))

    def _local(self, a: int, mat) -> np.ndarray:
        F = self.field
        out = F.array(np.ones((1, 1), dtype=np.int64))
        for b, fac in enumerate(self.factors):
            piece = F.array(mat) if b == a else F.identity(fac.dim)
            out = F.kron(out, piece)
        return out

    def current(self, x: str, i: int) -> np.ndarray:
        """Matrix of x (x) t^i on the tensor product."""
        key = (x, i)
        if key not in self._currents:
            F = self.field
            total = F.zeros((self.dim, self.dim))
            for a, fac in enumerate(self.factors):
                c = F.power(self._zetas[a], i)
                total = F.add(total, F.scale(self._local(a, fac.generators[x]), c))
            self._currents[key] = total
        return self._currents[key]

    def cyclic_vector(self) -> np.ndarray:
        v = np.ones(1, dtype=np.int64)
        for fac in self.factors:
            v = np.kron(v, fac.cyclic)
        return self.field.array(v)

    def weight_diagonal(self, name: str) -> np.ndarray:
        """Integer eigenvalues of sum_a w^(a) on the tensor basis."""
        total = np.zeros(1, dtype=np.int64)
        for fac in self.factors:
            total = np.add.outer(total, fac.weight_ops[name]).reshape(-1)
        return total

    def weight_classes(self) -> list[tuple[tuple[Fraction, ...], np.ndarray]]:
        """Group basis indices by the grading values, in sorted order."""
        if self._weights is None:
            cols = []
            for combo in self.gradings.values():
                val = np.zeros(self.dim, dtype=object)
                for w, c in combo.items():
                    val = val + self.weight_diagonal(w).astype(object) * Fraction(c)
                cols.append(val)
            keys = [tuple(Fraction(c[j]) for c in cols) for j in range(self.dim)]
            groups: dict[tuple, list[int]] = {}
            for j, key in enumerate(keys):
                groups.setdefault(key, []).append(j)
            self._weights = [(key, np.array(idx)) for key, idx in sorted(groups.items())]
        return self._weights


@dataclass
class Filtration:
    """F^0 c F^1 c ... stored as prefixes of one semi-echelon basis."""

    space: Subspace
    ends: list[int]

    @property
    def top(self) -> int:
        return len(self.ends) - 1

    def level(self, d: int) -> np.ndarray:
        if d < 0:
            return self.space.rows(0)
        return self.space.rows(self.ends[min(d, self.top)])

    def new_rows(self, d: int) -> np.ndarray:
        lo = self.ends[d - 1] if d > 0 else 0
        return self.space.rows()[lo : self.ends[d]]


def _apply(F, rows: np.ndarray, op: np.ndarray) -> np.ndarray:
    """Apply ``op`` to each row vector."""
    return F.matmul(rows, np.ascontiguousarray(op.T))


def _close(fp: FusionProblem, space: Subspace, start: int) -> None:
    """Close span(rows) under the degree-zero currents, scanning from ``start``."""
    F = fp.field
    frontier = start
    while frontier < space.dim:
        block = space.rows()[frontier : space.dim].copy()
        frontier = space.dim
        for x in fp.acting:
            space.add(_apply(F, block, fp.current(x, 0)))


def build_filtration(fp: FusionProblem) -> Filtration:
    """F^d = U^{<=d}(g[t]) applied to the tensor product of cyclic vectors."""
    F, n, N = fp.field, fp.dim, fp.N
    space = F.space(n)
    space.add(fp.cyclic_vector())
    _close(fp, space, 0)
    ends = [space.dim]
    idle = 0
    d = 0
    while space.dim < n:
        d += 1
        start = space.dim
        for i in range(1, min(d, N - 1) + 1):
            lo = ends[d - i - 1] if d - i - 1 >= 0 else 0
            hi = ends[d - i]
            if hi == lo:
                continue
            block = space.rows()[lo:hi].copy()
            for x in fp.acting:
                space.add(_apply(F, block, fp.current(x, i)))
        _close(fp, space, start)
        ends.append(space.dim)
        idle = idle + 1 if space.dim == start else 0
        if idle >= max(N - 1, 1):
            break
    while len(ends) > 1 and ends[-1] == ends[-2]:
        ends.pop()
    return Filtration(space, ends)


def weight_dims(fp: FusionProblem, rows: np.ndarray) -> dict[tuple, int]:
    """Dimensions of the weight pieces of a weight-stable subspace.

    ``rows`` must be a basis.  For a weight-stable space the projections to
    the weight spaces are its intersections with them, so their ranks add up
    to the dimension; anything else is reported as an error.
    """
    F = fp.field
    out = {}
    total = 0
    for key, idx in fp.weight_classes():
        r = F.rank(rows[:, idx]) if len(rows) else 0
        if r:
            out[key] = r
            total += r
    if total != len(rows):
        raise WeightInvarianceError(
            f"subspace of dim {len(rows)} is not a sum of weight spaces (sum {total})"
        )
    return out


@dataclass
class GradedDims:
    """dims[(d, w_1, ..., w_r)] with d the filtration degree."""

    variables: tuple[str, ...]
    dims: dict[tuple, int]

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def to_poly(self, ring: Ring, shift: Mapping[str, Fraction] | None = None) -> LaurentPoly:
        """q^d prod z_i^{w_i}; z-variables missing from ``ring`` must have weight 0."""
        shift = dict(shift or {})
        terms: dict[tuple[int, ...], int] = {}
        for key, c in self.dims.items():
            exps = {"q": key[0]}
            for var, w in zip(self.variables, key[1:]):
                exps[var] = w + shift.get(var, 0)
            for var in set(shift) - set(self.variables):
                exps[var] = shift[var]
            e = ring.stored(**exps)
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(ring, terms)

    def to_json_obj(self) -> dict:
        rows = []
        for key in sorted(self.dims):
            rows.append(
                {"d": key[0], "w": [str(w) for w in key[1:]], "dim": self.dims[key]}
            )
        return {"vars": list(self.variables), "dims": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _graded(fp: FusionProblem, per_degree: list[dict[tuple, int]]) -> GradedDims:
    dims = {}
    for d, wd in enumerate(per_degree):
        for key, c in wd.items():
            if c < 0:
                raise OracleError(f"negative graded dimension at {(d,) + key}")
            if c:
                dims[(d,) + key] = c
    return GradedDims(tuple(fp.gradings), dims)


def _diff(a: dict, b: dict) -> dict:
    return {key: a.get(key, 0) - b.get(key, 0) for key in set(a) | set(b)}


def fusion_graded_character(fp: FusionProblem, filt: Filtration | None = None) -> GradedDims:
    """Weight dimensions of F^d / F^{d-1}."""
    filt = filt or build_filtration(fp)
    prev: dict = {}
    per = []
    for d in range(filt.top + 1):
        cur = weight_dims(fp, filt.level(d))
        per.append(_diff(cur, prev))
        prev = cur
    return _graded(fp, per)


@dataclass(frozen=True)
class IdealOp:
    """(scale * x(x)t^{t_degree} + shift)^power."""

    name: str
    t_degree: int = 0
    power: int = 1
    shift: Fraction = Fraction(0)
    scale: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return self.t_degree * self.power

    def matrix(self, fp: FusionProblem) -> np.ndarray:
        F = fp.field
        try:
            base = F.scale(fp.current(self.name, self.t_degree), F.scalar(Fraction(self.scale)))
        except KeyError:
            raise OperatorNotExpressible(f"{self.name!r} is not a generator of every factor")
        if self.shift:
            base = F.add(base, F.scale(F.identity(fp.dim), F.scalar(Fraction(self.shift))))
        out = F.identity(fp.dim)
        for _ in range(self.power):
            out = F.matmul(out, base)
        return out

    def __str__(self):
        s = f"{self.name}[{self.t_degree}]"
        if self.scale != 1:
            s = f"{self.scale}*{s}"
        if self.shift:
            s = f"({s}+{self.shift})"
        return s + (f"^{self.power}" if self.power != 1 else "")


def _check_ops(fp: FusionProblem, ops: Sequence[IdealOp], mode: str):
    if mode not in ("graded", "filtered"):
        raise InconsistentMode(f"unknown mode {mode!r}")
    for op in ops:
        for fac in fp.factors:
            if op.name not in fac.generators:
                raise OperatorNotExpressible(f"{op.name!r} is not a generator of {fac.name}")
        if op.power < 0 or op.t_degree < 0:
            raise ValueError("ideal operators need non-negative degree and power")
        if mode == "graded" and op.shift and op.t_degree:
            raise InconsistentMode(f"{op} is not homogeneous; use filtered mode")


def graded_quotient_character(
    fp: FusionProblem,
    ideal_ops: Sequence[IdealOp],
    mode: str = "graded",
    filt: Filtration | None = None,
) -> GradedDims:
    """Graded character of a quotient of the fusion module.

    ``graded``: quotient of gr F by the images of homogeneous operators, so in
    degree D the relations are F^{D-1} + sum_s op_s F^{D - deg s}.
    ``filtered``: quotient of the whole space by Y = sum_s op_s F, filtered by
    the images of F^d, and then graded.
    """
    _check_ops(fp, ideal_ops, mode)
    filt = filt or build_filtration(fp)
    F = fp.field
    mats = [(op, op.matrix(fp)) for op in ideal_ops]
    per = []
    if mode == "graded":
        for D in range(filt.top + 1):
            rel = F.space(fp.dim)
            rel.add(filt.level(D - 1))
            for op, mat in mats:
                src = filt.level(D - op.degree) if D - op.degree >= 0 else None
                if src is not None and len(src):
                    rel.add(_apply(F, src, mat))
            level = filt.level(D)
            if rel.dim > len(level) or not _contains(filt, D, rel):
                raise OracleError(f"relations in degree {D} leave F^{D}")
            per.append(_diff(weight_dims(fp, level), weight_dims(fp, rel.rows())))
    else:
        whole = filt.level(filt.top)
        Y = F.space(fp.dim)
        for op, mat in mats:
            if len(whole):
                Y.add(_apply(F, whole, mat))
        prev = weight_dims(fp, Y.rows())
        for d in range(filt.top + 1):
            S = Y.copy()
            S.add(filt.new_rows(d))
            Y = S
            cur = weight_dims(fp, S.rows())
            per.append(_diff(cur, prev))
            prev = cur
    return _graded(fp, per)


def _contains(filt: Filtration, D: int, rel: Subspace) -> bool:
    trial = filt.space.field.space(filt.space.n)
    trial.add(filt.level(D))
    placed = trial.add(rel.rows())
    return bool(np.all(placed < 0))
