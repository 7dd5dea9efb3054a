"""Brute-force verification by explicit matrices over a prime field or Q."""

from __future__ import annotations

from .fusion import (
    FusionProblem,
    GradedDims,
    IdealOp,
    build_filtration,
    fusion_graded_character,
    graded_quotient_character,
)
from .modules import (
    RepModule,
    build_pi_sum,
    build_pibar_sum,
    build_sl2_irrep,
    build_sl3_sym,
    build_sl3_sym_dual,
    build_varpi,
    check_brackets,
)
from .oracles import (
    DEFAULT_PRIMES,
    DegeneracyError,
    OracleRun,
    oracle_chbig,
    oracle_chi,
    oracle_chmix,
    oracle_chpi,
    oracle_kappa,
    oracle_kostka,
    oracle_vm,
    oracle_vmmbar,
    robust_oracle,
    run_oracle,
)
