"""Verification suites: closed-form identities and formula-versus-oracle grids.

Each ``criterion_*`` function runs one family of checks and returns a
:class:`CriterionResult` holding the individual cases.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Sequence

from .algebra import DEFAULT_PRIME
from .characters import CoinvariantParams, ch_bigc, ch_bigc_alternating, ch_mixc, ch_vm, ch_vmmbar, chi
from .kostka import alternating_sum_kostka, restricted_kostka
from .oracle.oracles import DEFAULT_PRIMES, DegeneracyError, robust_oracle
from .qcomb import compositions_of_weight, f_coeff_at_one, multinomial_expansion, weight
from .verlinde import dim_bigc, dim_mixc, product_of_basis

ROBUST_SEEDS = (11, 22, 33)


@dataclass
class Case:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CriterionResult:
    number: int
    title: str
    cases: list[Case] = field(default_factory=list)
    seconds: float = 0.0
    limit: float | None = None

    @property
    def ok(self) -> bool:
        in_time = self.limit is None or self.seconds <= self.limit
        return in_time and all(c.ok for c in self.cases)

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        bad = len(self.failures())
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return (
            f"criterion {self.number:2d} {status}: {self.title}; "
            f"{len(self.cases)} cases, {bad} failed, {self.seconds:.2f}s{limit}"
        )


def _timed(number: int, title: str, limit: float | None, gen: Iterator[Case]) -> CriterionResult:
    res = CriterionResult(number, title, limit=limit)
    t0 = time.perf_counter()
    res.cases = list(gen)
    res.seconds = time.perf_counter() - t0
    return res


def all_compositions(k: int, max_total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of length k with sum of entries <= max_total."""
    for entries in product(range(max_total + 1), repeat=k):
        if sum(entries) <= max_total:
            yield entries


def _with_weight_at_most(k: int, w: int) -> Iterator[tuple[int, ...]]:
    for total in range(w + 1):
        yield from compositions_of_weight(total, k)


# -- parameter grids -------------------------------------------------------

def tensor_dim(m: Sequence[int]) -> int:
    out = 1
    for a, c in enumerate(m, start=1):
        out *= (a + 1) ** c
    return out


def chi_grid(max_dim: int = 36, max_index: int | None = None) -> list[tuple[int, ...]]:
    """All m with prod (a+1)^{m_a} <= max_dim (trailing zeros trimmed)."""
    top = max_dim - 1 if max_index is None else max_index
    out: list[tuple[int, ...]] = []

    def rec(a: int, dim: int, acc: list[int]):
        if a > top:
            while acc and acc[-1] == 0:
                acc = acc[:-1]
            if acc:
                out.append(tuple(acc))
            return
        c = 0
        while dim * (a + 1) ** c <= max_dim:
            rec(a + 1, dim * (a + 1) ** c, acc + [c])
            c += 1

    rec(1, 1, [])
    return sorted(set(out), key=lambda m: (tensor_dim(m), len(m), m))


def kostka_grid(max_dim: int = 36, max_k: int = 2) -> list[tuple[int, int, tuple[int, ...]]]:
    out = []
    for k in range(1, max_k + 1):
        for m in chi_grid(max_dim, max_index=k):
            for l in range(k + 1):
                out.append((k, l, m + (0,) * (k - len(m))))
    return out


def chbig_grid() -> list[tuple[int, int, int]]:
    out = [(k, l, N) for k in (1, 2) for N in (0, 1, 2) for l in range(k + 1)]
    out += [(3, l, 1) for l in range(4)]
    return out


def chmix_grid(max_k: int = 2, max_factors: int = 3) -> list[tuple[int, int, tuple, tuple]]:
    out = []
    for k in range(1, max_k + 1):
        for total in range(max_factors + 1):
            for p in range(total + 1):
                for M in compositions_with_sum(p, k):
                    for Mb in compositions_with_sum(total - p, k):
                        for l in range(k + 1):
                            out.append((k, l, M, Mb))
    return out


def compositions_with_sum(total: int, k: int) -> list[tuple[int, ...]]:
    return [c for c in product(range(total + 1), repeat=k) if sum(c) == total]


def vm_grid() -> list[tuple[int, ...]]:
    return [M for k in (1, 2) for N in (1, 2) for M in compositions_with_sum(N, k) if M[-1] or k == 1]


def vmmbar_grid(max_dim: int = 36, max_factors: int = 3, max_index: int = 3) -> list[tuple[tuple, tuple]]:
    dims = {a: (a + 1) * (a + 2) // 2 for a in range(1, max_index + 1)}
    out = []
    for nf in range(1, max_factors + 1):
        for M in product(range(nf + 1), repeat=max_index):
            pM = sum(M)
            if pM > nf:
                continue
            for Mb in compositions_with_sum(nf - pM, max_index):
                d = 1
                for a in dims:
                    d *= dims[a] ** (M[a - 1] + Mb[a - 1])
                if d <= max_dim:
                    out.append((_trim(M), _trim(Mb)))
    return sorted(set(out), key=lambda x: (sum(x[0]) + sum(x[1]), x))


def _trim(m: Sequence[int]) -> tuple[int, ...]:
    m = list(m)
    while len(m) > 1 and m[-1] == 0:
        m.pop()
    return tuple(m)


# -- identity criteria -----------------------------------------------------

def criterion_1() -> CriterionResult:
    def gen():
        for k in (1, 2, 3):
            for M in all_compositions(k, 4):
                expansion = multinomial_expansion(M)
                bound = sum(M)
                bad = [
                    m
                    for m in product(range(bound + 2), repeat=k)
                    if f_coeff_at_one(M, m) != expansion.get(m, 0)
                ]
                yield Case(f"F at q=1, k={k} M={M}", not bad, f"bad m: {bad[:3]}" if bad else "")

    return _timed(1, "q-multinomial F_{M,m}(1) equals the expansion coefficient", 1.0, gen())


def criterion_2() -> CriterionResult:
    def gen():
        for k in (1, 2, 3):
            for m in all_compositions(k, 4):
                ver = product_of_basis(k, m)
                for l in range(k + 1):
                    K = restricted_kostka(k, l, m).specialize({"q": 1})
                    want = ver.coeff(l)
                    yield Case(f"K^({k})_{l},{m}(1)", K == want, f"{K} != {want}")

    return _timed(2, "restricted Kostka at q=1 equals the Verlinde coefficient", 1.0, gen())


def criterion_3() -> CriterionResult:
    def gen():
        for k in (1, 2, 3):
            for N in range(4):
                for l in range(k + 1):
                    c = ch_bigc(CoinvariantParams(k, l, N=N)).specialize({"q": 1, "z": 1})
                    d = dim_bigc(k, l, N)
                    yield Case(f"bigc k={k} l={l} N={N}", c == d, f"{c} != {d}")
            for M in _with_weight_at_most(k, 5):
                for Mb in _with_weight_at_most(k, 5 - weight(M)):
                    for l in range(k + 1):
                        c = ch_mixc(CoinvariantParams(k, l, M=M, Mbar=Mb)).specialize({"q": 1, "z": 1})
                        d = dim_mixc(k, l, M, Mb)
                        yield Case(f"mixc k={k} l={l} M={M} Mbar={Mb}", c == d, f"{c} != {d}")

    return _timed(3, "dimension formulas equal characters at q=z=1", 10.0, gen())


def criterion_4() -> CriterionResult:
    def gen():
        for k in (1, 2, 3):
            for N in range(4):
                for l in range(k + 1):
                    p = CoinvariantParams(k, l, N=N)
                    yield Case(f"alternating bigc k={k} l={l} N={N}", ch_bigc(p) == ch_bigc_alternating(p))
        for k in (1, 2, 3, 4):
            for m in _with_weight_at_most(k, 8):
                for l in range(k + 1):
                    ok = restricted_kostka(k, l, m) == alternating_sum_kostka(k, l, m)
                    yield Case(f"alternating Kostka k={k} l={l} m={m}", ok)

    return _timed(4, "alternating-sum identities for characters and Kostka", 30.0, gen())


IDENTITY_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
)


# -- oracle criteria -------------------------------------------------------

@dataclass(frozen=True)
class OracleSettings:
    primes: tuple[int, ...] = DEFAULT_PRIMES
    seeds: tuple[int, ...] = ROBUST_SEEDS
    retries: int = 2


def _oracle_case(label: str, name: str, params: dict, expected, settings: OracleSettings, **options) -> Case:
    try:
        poly, runs = robust_oracle(name, params, settings.primes, settings.seeds, settings.retries, **options)
    except DegeneracyError as exc:
        return Case(label, False, str(exc))
    if poly != expected:
        return Case(label, False, f"oracle {poly} != formula {expected}")
    return Case(label, True, f"{len(runs)} runs agree")


def criterion_5(settings: OracleSettings = OracleSettings()) -> CriterionResult:
    def gen():
        for m in chi_grid():
            yield _oracle_case(f"chi m={m}", "chi", {"m": m}, chi(m), settings)

    return _timed(5, "fusion character oracle equals chi_m", 60.0, gen())


def criterion_6(settings: OracleSettings = OracleSettings()) -> CriterionResult:
    def gen():
        for k, l, m in kostka_grid():
            yield _oracle_case(
                f"kostka k={k} l={l} m={m}", "kostka", {"k": k, "l": l, "m": m}, restricted_kostka(k, l, m), settings
            )

    return _timed(6, "Kostka quotient oracle equals restricted Kostka", 60.0, gen())


def criterion_7(settings: OracleSettings = OracleSettings()) -> CriterionResult:
    def gen():
        for k, l, N in chbig_grid():
            expected = ch_bigc(CoinvariantParams(k, l, N=N))
            yield _oracle_case(f"chbig k={k} l={l} N={N}", "chbig", {"k": k, "l": l, "N": N}, expected, settings)

    return _timed(7, "graded quotient oracle equals ch_bigc", 120.0, gen())


def criterion_8(settings: OracleSettings = OracleSettings()) -> CriterionResult:
    def gen():
        for k, l, M, Mb in chmix_grid():
            expected = ch_mixc(CoinvariantParams(k, l, M=M, Mbar=Mb))
            params = {"k": k, "l": l, "M": M, "Mbar": Mb}
            yield _oracle_case(f"chmix k={k} l={l} M={M} Mbar={Mb}", "chmix", params, expected, settings)

    return _timed(8, "filtered quotient oracle equals ch_mixc", 120.0, gen())


def criterion_9(settings: OracleSettings = OracleSettings()) -> CriterionResult:
    def gen():
        for M in vm_grid():
            yield _oracle_case(f"vm M={M}", "vm", {"M": M}, ch_vm(M), settings)
        for M, Mb in vmmbar_grid():
            yield _oracle_case(f"vmmbar M={M} Mbar={Mb}", "vmmbar", {"M": M, "Mbar": Mb}, ch_vmmbar(M, Mb), settings)

    return _timed(9, "two-variable fusion oracles equal ch_vm and ch_vmmbar", 120.0, gen())


ORACLE_CRITERIA = (criterion_5, criterion_6, criterion_7, criterion_8, criterion_9)


def criterion_10(previous: Sequence[CriterionResult] | None = None) -> CriterionResult:
    """Criteria 5-9 with two primes and three evaluation-point draws each."""
    settings = OracleSettings(DEFAULT_PRIMES, ROBUST_SEEDS)
    res = CriterionResult(10, "criteria 5-9 agree across 2 primes x 3 draws")
    t0 = time.perf_counter()
    results = list(previous) if previous is not None else [c(settings) for c in ORACLE_CRITERIA]
    for r in results:
        res.cases.append(Case(f"criterion {r.number}", r.ok, f"{len(r.failures())} failures"))
    res.seconds = time.perf_counter() - t0
    return res


# -- suites for the command line ------------------------------------------

def small_settings(prime: int, seed: int) -> OracleSettings:
    return OracleSettings((prime,), (seed,), retries=2)


def oracle_small(prime: int = DEFAULT_PRIME, seed: int = 0) -> list[CriterionResult]:
    """A quick formula-versus-oracle grid with a single (prime, seed)."""
    s = small_settings(prime, seed)

    def gen():
        for m in chi_grid(12):
            yield _oracle_case(f"chi m={m}", "chi", {"m": m}, chi(m), s)
        for k, l, m in kostka_grid(12):
            yield _oracle_case(f"kostka k={k} l={l} m={m}", "kostka", {"k": k, "l": l, "m": m}, restricted_kostka(k, l, m), s)
        for k, l, N in [(1, l, N) for N in (1, 2) for l in (0, 1)]:
            yield _oracle_case(f"chbig k={k} l={l} N={N}", "chbig", {"k": k, "l": l, "N": N}, ch_bigc(CoinvariantParams(k, l, N=N)), s)
        for k, l, M, Mb in chmix_grid(max_k=1, max_factors=2):
            expected = ch_mixc(CoinvariantParams(k, l, M=M, Mbar=Mb))
            yield _oracle_case(f"chmix k={k} l={l} M={M} Mbar={Mb}", "chmix", {"k": k, "l": l, "M": M, "Mbar": Mb}, expected, s)
        yield _oracle_case("vm M=(1,)", "vm", {"M": (1,)}, ch_vm((1,)), s)
        for M, Mb in [((1,), (0,)), ((1,), (1,))]:
            yield _oracle_case(f"vmmbar M={M} Mbar={Mb}", "vmmbar", {"M": M, "Mbar": Mb}, ch_vmmbar(M, Mb), s)

    return [_timed(0, "small formula-versus-oracle grid", None, gen())]


SUITES = ("identities", "oracle-small", "oracle-full")


def run_suite(name: str, prime: int | None = None, seed: int | None = None) -> list[CriterionResult]:
    if name == "identities":
        return [c() for c in IDENTITY_CRITERIA]
    if name == "oracle-small":
        return oracle_small(prime or DEFAULT_PRIME, 0 if seed is None else seed)
    if name == "oracle-full":
        primes = DEFAULT_PRIMES if prime is None else (prime,) + tuple(p for p in DEFAULT_PRIMES if p != prime)[:1]
        seeds = ROBUST_SEEDS if seed is None else (seed, seed + 1, seed + 2)
        settings = OracleSettings(primes, seeds)
        results = [c(settings) for c in ORACLE_CRITERIA]
        return results + [criterion_10(results)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
