"""The ten acceptance criteria, each at its stated tolerance and time limit.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for
a one-line-per-criterion report.
"""

from __future__ import annotations

import sys

from fermionic.oracle.oracles import DEFAULT_PRIMES
from fermionic.verify import (
    ROBUST_SEEDS,
    CriterionResult,
    OracleSettings,
    chbig_grid,
    chi_grid,
    chmix_grid,
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    kostka_grid,
    vm_grid,
    vmmbar_grid,
)

# two primes x three evaluation-point draws for every oracle criterion
ROBUST = OracleSettings(DEFAULT_PRIMES, ROBUST_SEEDS)
_results: dict[int, CriterionResult] = {}


def _report(res: CriterionResult, capsys=None) -> None:
    _results[res.number] = res
    line = res.summary()
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    for case in res.failures()[:10]:
        print(f"    failed: {case.name} {case.detail}")


def _check(res: CriterionResult, capsys) -> None:
    _report(res, capsys)
    assert res.cases, "criterion ran no cases"
    assert not res.failures(), [f"{c.name}: {c.detail}" for c in res.failures()[:5]]
    assert res.limit is None or res.seconds <= res.limit, f"took {res.seconds:.1f}s > {res.limit}s"


def test_grids_cover_the_named_cases():
    chis = set(chi_grid())
    assert {(2,), (3,), (1, 1), (0, 2), (2, 1)} <= chis
    assert all(len(m) <= 35 for m in chis)
    assert {(k, l) for k, l, _ in kostka_grid()} == {(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)}
    assert (2, 0, 2) in chbig_grid() and (3, 3, 1) in chbig_grid()
    assert (2, 1, (0, 2), (0, 1)) in chmix_grid()
    assert (0, 2) in vm_grid()
    assert {((1,), (1,)), ((2,), (1,)), ((2,), (0,))} <= set(vmmbar_grid())


def test_criterion_1_multinomial(capsys):
    _check(criterion_1(), capsys)


def test_criterion_2_verlinde_kostka(capsys):
    _check(criterion_2(), capsys)


def test_criterion_3_dimensions(capsys):
    _check(criterion_3(), capsys)


def test_criterion_4_alternating_sum(capsys):
    _check(criterion_4(), capsys)


def test_criterion_5_fusion_character(capsys):
    _check(criterion_5(ROBUST), capsys)


def test_criterion_6_kostka_quotient(capsys):
    _check(criterion_6(ROBUST), capsys)


def test_criterion_7_bigc_oracle(capsys):
    _check(criterion_7(ROBUST), capsys)


def test_criterion_8_mixc_oracle(capsys):
    _check(criterion_8(ROBUST), capsys)


def test_criterion_9_two_variable_oracles(capsys):
    _check(criterion_9(ROBUST), capsys)


def test_criterion_10_robustness(capsys):
    previous = [_results[n] for n in range(5, 10) if n in _results]
    if len(previous) < 5:
        previous = [c(ROBUST) for c in (criterion_5, criterion_6, criterion_7, criterion_8, criterion_9)]
    _check(criterion_10(previous), capsys)


def main() -> int:
    results = [criterion_1(), criterion_2(), criterion_3(), criterion_4()]
    oracle = [c(ROBUST) for c in (criterion_5, criterion_6, criterion_7, criterion_8, criterion_9)]
    results += oracle + [criterion_10(oracle)]
    for r in results:
        print(r.summary())
        for case in r.failures()[:10]:
            print(f"    failed: {case.name} {case.detail}")
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
