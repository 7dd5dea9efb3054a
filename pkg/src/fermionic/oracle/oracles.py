"""Brute-force characters assembled from explicit fusion problems.

Every oracle is a pure function of its parameters, a field and a seed; the
seed fixes the evaluation points.  :func:`robust_oracle` repeats a run over
several (prime, seed) pairs and insists that the answers agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..algebra import DEFAULT_PRIME, Q, QZ, QZZ, QZZ6, LaurentPoly
from ..qcomb import as_composition, weight
from .fusion import (
    Filtration,
    FusionProblem,
    GradedDims,
    IdealOp,
    OracleError,
    build_filtration,
    fusion_graded_character,
    graded_quotient_character,
)
from .linalg import make_field
from .modules import (
    SL3_GENERATORS,
    RepModule,
    build_pi_sum,
    build_pibar_sum,
    build_sl2_irrep,
    build_sl3_sym,
    build_sl3_sym_dual,
    build_varpi,
)

SECOND_PRIME = 2_147_483_629
DEFAULT_PRIMES = (DEFAULT_PRIME, SECOND_PRIME)

SL2 = ("e", "f", "h")
SL2_SECOND = ("e''", "f''", "h''")
SL2_BOTH = ("e'", "f'", "h'", "e''", "f''", "h''")

_BUILDERS: dict[str, Callable[[int], RepModule]] = {
    "pi": build_sl2_irrep,
    "varpi": build_varpi,
    "pisum": build_pi_sum,
    "pibarsum": build_pibar_sum,
    "sym": build_sl3_sym,
    "symdual": build_sl3_sym_dual,
}


class DegeneracyError(OracleError):
    """Different evaluation points or primes kept giving different answers."""


def draw_zetas(field, count: int, seed: int) -> list:
    """Distinct nonzero evaluation points, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    if field.exact:
        pool = [x for x in range(-4 * count - 4, 4 * count + 5) if x]
        return [int(x) for x in rng.choice(pool, size=count, replace=False)]
    out: list[int] = []
    while len(out) < count:
        x = int(rng.integers(1, field.p))
        if x not in out:
            out.append(x)
    return out


FactorSpec = tuple[tuple[str, int], ...]

_FILTRATIONS: dict[tuple, tuple[FusionProblem, Filtration]] = {}


def _factors_from(kind: str, M: Sequence[int]) -> FactorSpec:
    """M_a copies of the kind-``a`` module, a = 1, 2, ..."""
    return tuple((kind, a) for a, c in enumerate(M, start=1) for _ in range(c))


def fusion_problem(
    spec: FactorSpec, acting: Sequence[str], gradings: dict, prime: int | None, seed: int
) -> tuple[FusionProblem, Filtration]:
    """Build (or fetch) the problem and its filtration.

    The filtration depends only on factors, acting generators, field and
    seed, so it is shared between calls that differ in grading or ideal.
    """
    field = make_field(prime)
    key = (spec, tuple(acting), prime, seed)
    cached = _FILTRATIONS.get(key)
    factors = [_BUILDERS[kind](param) for kind, param in spec]
    fp = FusionProblem(factors, draw_zetas(field, len(factors), seed), field, tuple(acting), gradings)
    if cached is None:
        cached = (fp, build_filtration(fp))
        _FILTRATIONS[key] = cached
    # reuse the filtration and the already built current matrices
    fp._currents = cached[0]._currents
    return fp, cached[1]


def clear_cache() -> None:
    _FILTRATIONS.clear()


@dataclass
class OracleRun:
    name: str
    params: dict
    prime: int | None
    seed: int
    zetas: list
    graded: GradedDims
    poly: LaurentPoly
    expected: LaurentPoly | None = None

    @property
    def verdict(self) -> str | None:
        if self.expected is None:
            return None
        return "match" if self.expected == self.poly else "mismatch"

    def to_json_obj(self) -> dict:
        obj = {
            "oracle": self.name,
            "params": self.params,
            "prime": self.prime,
            "seed": self.seed,
            "zetas": [str(z) for z in self.zetas],
            "graded_dims": self.graded.to_json_obj(),
            "poly": self.poly.to_json_obj(),
        }
        if self.expected is not None:
            obj["expected"] = self.expected.to_json_obj()
            obj["verdict"] = self.verdict
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _params_k_l(k: int, l: int):
    if k < 1 or not 0 <= l <= k:
        raise ValueError(f"need k >= 1 and 0 <= l <= k, got k={k}, l={l}")


def _run_chi(m, prime, seed):
    m = as_composition(m)
    fp, filt = fusion_problem(_factors_from("pi", m), SL2, {"z": {"h": Fraction(1, 2)}}, prime, seed)
    g = fusion_graded_character(fp, filt)
    return fp, g, g.to_poly(QZ, {"z": Fraction(weight(m), 2)})


def _run_chpi(m, prime, seed):
    m = as_composition(m)
    fp, filt = fusion_problem(_factors_from("pi", m), SL2, {"z": {"h": Fraction(1, 2)}}, prime, seed)
    g = fusion_graded_character(fp, filt)
    return fp, g, g.to_poly(QZ)


def _kostka_ideal(k: int, l: int, e: str = "e", h: str = "h") -> list[IdealOp]:
    return [IdealOp(e), IdealOp(e, 1, k - l + 1), IdealOp(h, shift=Fraction(l))]


def _run_kostka(k, l, m, prime, seed):
    _params_k_l(k, l)
    m = as_composition(m, k)
    fp, filt = fusion_problem(_factors_from("pi", m), SL2, {}, prime, seed)
    g = graded_quotient_character(fp, _kostka_ideal(k, l), "graded", filt)
    return fp, g, g.to_poly(Q)


def _run_chbig(k, l, N, prime, seed):
    _params_k_l(k, l)
    if N < 0:
        raise ValueError("N must be non-negative")
    spec = (("varpi", k),) * N
    fp, filt = fusion_problem(spec, SL2_SECOND, {"z": {"h'": Fraction(1, 2)}}, prime, seed)
    _assert_h_normalisation(fp, filt, l)
    g = graded_quotient_character(fp, _kostka_ideal(k, l, "e''", "h''"), "graded", filt)
    return fp, g, g.to_poly(QZ)


def _assert_h_normalisation(fp: FusionProblem, filt: Filtration, l: int) -> None:
    """(h''_0 + l) and (D_2 + l/2), D_2 = h''_0 / 2, have the same image."""
    F = fp.field
    whole = filt.level(filt.top)
    a = IdealOp("h''", shift=Fraction(l)).matrix(fp)
    b = IdealOp("h''", shift=Fraction(l, 2), scale=Fraction(1, 2)).matrix(fp)
    sa, sb = F.space(fp.dim), F.space(fp.dim)
    if len(whole):
        sa.add(F.matmul(whole, np.ascontiguousarray(a.T)))
        sb.add(F.matmul(whole, np.ascontiguousarray(b.T)))
    if not (sa.dim == sb.dim and sa.contains(sb.rows())):
        raise OracleError("(h''+l) and (D_2+l/2) have different images")


def _run_kappa(l, M, prime, seed):
    M = as_composition(M)
    fp, filt = fusion_problem(_factors_from("varpi", M), SL2_SECOND, {"z": {"h'": Fraction(1, 2)}}, prime, seed)
    ideal = [IdealOp("e''"), IdealOp("h''", shift=Fraction(l))]
    g = graded_quotient_character(fp, ideal, "graded", filt)
    return fp, g, g.to_poly(QZ)


CARTAN_READINGS = ("diagonal", "htilde")


def _run_chmix(k, l, M, Mbar, prime, seed, cartan="diagonal"):
    """Filtered quotient of pi^(k_i) and pibar^(kbar_j) factors.

    ``cartan="diagonal"`` uses h_0 + l in the ideal and grades by htilde.
    ``cartan="htilde"`` uses htilde + l instead and grades by -h_0, which
    agrees with htilde on the cyclic vector.
    """
    _params_k_l(k, l)
    if cartan not in CARTAN_READINGS:
        raise ValueError(f"cartan must be one of {CARTAN_READINGS}")
    M, Mbar = as_composition(M, k), as_composition(Mbar, k)
    spec = _factors_from("pisum", M) + _factors_from("pibarsum", Mbar)
    if cartan == "diagonal":
        grading = {"z": {"htilde": 1}}
        ideal = [IdealOp("e"), IdealOp("h", shift=Fraction(l)), IdealOp("e", 1, k - l + 1)]
    else:
        grading = {"z": {"h": -1}}
        ideal = [IdealOp("e"), IdealOp("htilde", shift=Fraction(l)), IdealOp("e", 1, k - l + 1)]
    fp, filt = fusion_problem(spec, SL2, grading, prime, seed)
    g = graded_quotient_character(fp, ideal, "filtered", filt)
    return fp, g, g.to_poly(QZ)


def _run_vm(M, prime, seed):
    M = as_composition(M)
    grading = {"z1": {"h'": Fraction(1, 2)}, "z2": {"h''": Fraction(1, 2)}}
    fp, filt = fusion_problem(_factors_from("varpi", M), SL2_BOTH, grading, prime, seed)
    g = fusion_graded_character(fp, filt)
    return fp, g, g.to_poly(QZZ)


def _run_vmmbar(M, Mbar, prime, seed):
    M, Mbar = as_composition(M), as_composition(Mbar)
    grading = {
        "z1": {"h12": Fraction(2, 3), "h23": Fraction(1, 3)},
        "z2": {"h12": Fraction(1, 3), "h23": Fraction(2, 3)},
    }
    spec = _factors_from("sym", M) + _factors_from("symdual", Mbar)
    fp, filt = fusion_problem(spec, SL3_GENERATORS, grading, prime, seed)
    g = fusion_graded_character(fp, filt)
    return fp, g, g.to_poly(QZZ6)


_RUNNERS = {
    "chi": (_run_chi, ("m",)),
    "chpi": (_run_chpi, ("m",)),
    "kostka": (_run_kostka, ("k", "l", "m")),
    "chbig": (_run_chbig, ("k", "l", "N")),
    "kappa": (_run_kappa, ("l", "M")),
    "chmix": (_run_chmix, ("k", "l", "M", "Mbar")),
    "vm": (_run_vm, ("M",)),
    "vmmbar": (_run_vmmbar, ("M", "Mbar")),
}

ORACLE_NAMES = tuple(_RUNNERS)


def _norm(value):
    return list(value) if isinstance(value, (tuple, list)) else value


def run_oracle(name: str, params: dict, prime: int | None = DEFAULT_PRIME, seed: int = 0, **options) -> OracleRun:
    """One oracle run; ``prime=None`` selects exact rational arithmetic."""
    if name not in _RUNNERS:
        raise ValueError(f"unknown oracle {name!r}; choose from {', '.join(ORACLE_NAMES)}")
    fn, keys = _RUNNERS[name]
    missing = [key for key in keys if key not in params]
    if missing:
        raise ValueError(f"oracle {name} needs parameters {', '.join(missing)}")
    args = [params[key] for key in keys]
    fp, graded, poly = fn(*args, prime, seed, **options)
    return OracleRun(
        name,
        {key: _norm(params[key]) for key in keys} | ({"cartan": options["cartan"]} if "cartan" in options else {}),
        prime,
        seed,
        [int(z) for z in fp.zetas],
        graded,
        poly,
    )


def robust_oracle(
    name: str,
    params: dict,
    primes: Sequence[int] = DEFAULT_PRIMES,
    seeds: Sequence[int] = (0, 1),
    retries: int = 2,
    **options,
) -> tuple[LaurentPoly, list[OracleRun]]:
    """Run over every (prime, seed) pair and require identical polynomials.

    On disagreement the seeds are replaced by fresh ones up to ``retries``
    times; a persistent disagreement raises :class:`DegeneracyError`.
    """
    seeds = list(seeds)
    for attempt in range(retries + 1):
        runs = [run_oracle(name, params, p, s, **options) for p in primes for s in seeds]
        polys = {r.poly for r in runs}
        if len(polys) == 1:
            return runs[0].poly, runs
        seeds = [s + 1000 * (attempt + 1) for s in seeds]
    raise DegeneracyError(f"oracle {name} {params}: runs disagree after {retries} retries")


def oracle_chi(m, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("chi", {"m": m}, prime, seed).poly


def oracle_chpi(m, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("chpi", {"m": m}, prime, seed).poly


def oracle_kostka(k, l, m, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("kostka", {"k": k, "l": l, "m": m}, prime, seed).poly


def oracle_chbig(k, l, N, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("chbig", {"k": k, "l": l, "N": N}, prime, seed).poly


def oracle_kappa(l, M, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("kappa", {"l": l, "M": M}, prime, seed).poly


def oracle_chmix(k, l, M, Mbar, prime=DEFAULT_PRIME, seed=0, cartan="diagonal") -> LaurentPoly:
    return run_oracle("chmix", {"k": k, "l": l, "M": M, "Mbar": Mbar}, prime, seed, cartan=cartan).poly


def oracle_vm(M, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("vm", {"M": M}, prime, seed).poly


def oracle_vmmbar(M, Mbar, prime=DEFAULT_PRIME, seed=0) -> LaurentPoly:
    return run_oracle("vmmbar", {"M": M, "Mbar": Mbar}, prime, seed).poly
