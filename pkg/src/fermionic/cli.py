"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import DEFAULT_PRIME, LaurentPoly, check_prime
from .characters import CoinvariantParams, ch_bigc, ch_mixc, ch_pi, ch_vm, ch_vmmbar, chi, kappa
from .kostka import restricted_kostka, unrestricted_kostka
from .qcomb import f_coeff, q_binomial
from .verlinde import dim_bigc, dim_mixc

PRIME_ENV = "FERMIONIC_PRIME"
FORMATS = ("json", "csv", "pretty")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    k: int | None = None
    l: int | None = None
    N: int | None = None
    n: int | None = None
    m: tuple[int, ...] | None = None
    M: tuple[int, ...] | None = None
    Mbar: tuple[int, ...] | None = None
    prime: int | None = DEFAULT_PRIME
    seed: int = 0
    fmt: str = "json"
    suite: str | None = None
    oracle: str | None = None
    cartan: str = "diagonal"
    prime_given: bool = False
    seed_given: bool = False

    def need(self, *names: str) -> None:
        missing = [f"--{x}" for x in names if getattr(self, x) is None]
        if missing:
            raise UsageError(f"{self.command} needs {' '.join(missing)}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("entries must be non-negative")
    return values


def _default_prime() -> int:
    raw = os.environ.get(PRIME_ENV)
    if not raw:
        return DEFAULT_PRIME
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PRIME_ENV} must be an integer, got {raw!r}")


# -- output ----------------------------------------------------------------

def _exp_str(x: int, scale: int) -> str:
    return str(Fraction(x, scale))


def format_poly(p: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_json_obj(), sort_keys=True)
    if fmt == "pretty":
        return str(p)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(p.ring.vars) + ["coeff"])
    for e, c in p.items():
        w.writerow([_exp_str(x, s) for x, s in zip(e, p.ring.scales)] + [c])
    return buf.getvalue().rstrip("\n")


def format_int(value: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"value": value})
    if fmt == "csv":
        return f"value\n{value}"
    return str(value)


# -- commands --------------------------------------------------------------

def _params(cfg: RunConfig, **kw) -> CoinvariantParams:
    return CoinvariantParams(cfg.k, cfg.l, **kw)


def _padded(cfg: RunConfig, comp: tuple[int, ...]) -> tuple[int, ...]:
    if len(comp) > cfg.k:
        raise UsageError(f"composition {comp} is longer than k={cfg.k}")
    return comp + (0,) * (cfg.k - len(comp))


def cmd_compute(cfg: RunConfig) -> str:
    c = cfg.command
    if c == "chbig":
        cfg.need("k", "l", "N")
        return format_poly(ch_bigc(_params(cfg, N=cfg.N)), cfg.fmt)
    if c == "chmix":
        cfg.need("k", "l", "M", "Mbar")
        p = _params(cfg, M=_padded(cfg, cfg.M), Mbar=_padded(cfg, cfg.Mbar))
        return format_poly(ch_mixc(p), cfg.fmt)
    if c == "chi":
        cfg.need("m")
        return format_poly(chi(cfg.m), cfg.fmt)
    if c == "chpi":
        cfg.need("m")
        return format_poly(ch_pi(cfg.m), cfg.fmt)
    if c == "vm":
        cfg.need("M")
        return format_poly(ch_vm(cfg.M), cfg.fmt)
    if c == "vmmbar":
        cfg.need("M", "Mbar")
        return format_poly(ch_vmmbar(cfg.M, cfg.Mbar), cfg.fmt)
    if c == "kappa":
        cfg.need("l", "M")
        return format_poly(kappa(cfg.l, cfg.M), cfg.fmt)
    if c == "kostka":
        cfg.need("l", "m")
        if cfg.k is None:
            return format_poly(unrestricted_kostka(cfg.l, cfg.m), cfg.fmt)
        return format_poly(restricted_kostka(cfg.k, cfg.l, _padded(cfg, cfg.m)), cfg.fmt)
    if c == "fcoeff":
        cfg.need("M", "m")
        if len(cfg.M) != len(cfg.m):
            raise UsageError("--M and --m must have the same length")
        return format_poly(f_coeff(cfg.M, cfg.m), cfg.fmt)
    if c == "qbinom":
        if cfg.m is None or len(cfg.m) != 1 or cfg.n is None:
            raise UsageError("qbinom needs --m <int> --n <int>")
        return format_poly(q_binomial(cfg.m[0], cfg.n), cfg.fmt)
    if c == "verlinde-dim":
        cfg.need("k", "l")
        if cfg.N is not None:
            return format_int(dim_bigc(cfg.k, cfg.l, cfg.N), cfg.fmt)
        cfg.need("M", "Mbar")
        return format_int(dim_mixc(cfg.k, cfg.l, _padded(cfg, cfg.M), _padded(cfg, cfg.Mbar)), cfg.fmt)
    raise UsageError(f"unknown command {c!r}")


_ORACLE_EXPECTED = {
    "chi": lambda c: chi(c.m),
    "chpi": lambda c: ch_pi(c.m),
    "kostka": lambda c: restricted_kostka(c.k, c.l, _padded(c, c.m)),
    "chbig": lambda c: ch_bigc(_params(c, N=c.N)),
    "kappa": lambda c: kappa(c.l, c.M),
    "chmix": lambda c: ch_mixc(_params(c, M=_padded(c, c.M), Mbar=_padded(c, c.Mbar))),
    "vm": lambda c: ch_vm(c.M),
    "vmmbar": lambda c: ch_vmmbar(c.M, c.Mbar),
}


def cmd_oracle(cfg: RunConfig) -> tuple[str, int]:
    from .oracle.oracles import _RUNNERS, run_oracle

    if cfg.oracle not in _RUNNERS:
        raise UsageError(f"unknown oracle {cfg.oracle!r}; choose from {', '.join(_RUNNERS)}")
    keys = _RUNNERS[cfg.oracle][1]
    cfg.need(*keys)
    params = {key: getattr(cfg, key) for key in keys}
    options = {"cartan": cfg.cartan} if cfg.oracle == "chmix" else {}
    run = run_oracle(cfg.oracle, params, cfg.prime, cfg.seed, **options)
    if not (cfg.oracle == "chmix" and cfg.cartan != "diagonal"):
        run.expected = _ORACLE_EXPECTED[cfg.oracle](cfg)
    status = 0 if run.verdict in (None, "match") else 1
    if cfg.fmt == "json":
        return json.dumps(run.to_json_obj(), sort_keys=True), status
    if cfg.fmt == "csv":
        return format_poly(run.poly, "csv"), status
    lines = [f"oracle {cfg.oracle} {json.dumps(run.params, sort_keys=True)}", f"prime {run.prime or 'exact rationals'} seed {run.seed}"]
    lines.append(f"poly {run.poly}")
    if run.verdict:
        lines.append(f"verdict {run.verdict}")
    return "\n".join(lines), status


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    from .verify import SUITES, run_suite

    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    prime = cfg.prime if cfg.prime_given else None
    results = run_suite(cfg.suite, prime, cfg.seed if cfg.seed_given else None)
    ok = all(r.ok for r in results)
    if cfg.fmt == "json":
        obj = {
            "suite": cfg.suite,
            "ok": ok,
            "criteria": [
                {
                    "number": r.number,
                    "title": r.title,
                    "ok": r.ok,
                    "cases": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in r.cases],
                }
                for r in results
            ],
        }
        return json.dumps(obj, sort_keys=True), 0 if ok else 1
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["criterion", "case", "ok", "detail"])
        for r in results:
            for c in r.cases:
                w.writerow([r.number, c.name, "pass" if c.ok else "fail", c.detail])
        return buf.getvalue().rstrip("\n"), 0 if ok else 1
    lines = []
    for r in results:
        for c in r.cases:
            lines.append(f"{'pass' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if not c.ok else ""))
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.title}: {len(r.cases) - len(r.failures())}/{len(r.cases)}")
    lines.append("all passed" if ok else "FAILURES")
    return "\n".join(lines), 0 if ok else 1


# -- argument parsing ------------------------------------------------------

COMPUTE_COMMANDS = ("chbig", "chmix", "chi", "chpi", "vm", "vmmbar", "kappa", "kostka", "fcoeff", "qbinom", "verlinde-dim")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int, help="second argument of qbinom")
    p.add_argument("--m", type=_int_list)
    p.add_argument("--M", type=_int_list)
    p.add_argument("--Mbar", type=_int_list)
    p.add_argument("--prime", type=int, help=f"prime modulus (default ${PRIME_ENV} or {DEFAULT_PRIME})")
    p.add_argument("--exact", action="store_true", help="oracle over the rationals instead of a prime field")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=FORMATS, default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermionic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMPUTE_COMMANDS:
        _common(sub.add_parser(name))
    p = sub.add_parser("oracle", help="run a brute-force oracle and compare with the formula")
    p.add_argument("oracle")
    p.add_argument("--cartan", choices=("diagonal", "htilde"), default="diagonal")
    _common(p)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite_pos", nargs="?", metavar="suite")
    p.add_argument("--suite")
    _common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    prime = ns.prime if ns.prime is not None else _default_prime()
    try:
        check_prime(prime)
    except ValueError as exc:
        raise UsageError(str(exc))
    cfg = RunConfig(
        command=ns.command,
        k=ns.k,
        l=ns.l,
        N=ns.N,
        n=ns.n,
        m=ns.m,
        M=ns.M,
        Mbar=ns.Mbar,
        prime=None if ns.exact else prime,
        seed=0 if ns.seed is None else ns.seed,
        fmt=ns.format,
    )
    cfg.prime_given = ns.prime is not None or bool(os.environ.get(PRIME_ENV))
    cfg.seed_given = ns.seed is not None
    if ns.command == "oracle":
        cfg.oracle = ns.oracle
        cfg.cartan = ns.cartan
    if ns.command == "verify":
        if ns.suite and ns.suite_pos and ns.suite != ns.suite_pos:
            raise UsageError("suite given twice with different values")
        cfg.suite = ns.suite or ns.suite_pos
        if cfg.suite is None:
            raise UsageError("verify needs a suite name")
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        if cfg.command == "verify":
            out, status = cmd_verify(cfg)
        elif cfg.command == "oracle":
            out, status = cmd_oracle(cfg)
        else:
            out, status = cmd_compute(cfg), 0
    except (UsageError, ValueError, TypeError) as exc:
        print(f"fermionic: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
