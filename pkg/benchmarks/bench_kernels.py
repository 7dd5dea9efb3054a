"""Compare the numba and numpy kernels on mod-p row reduction and products.

    python3 benchmarks/bench_kernels.py [--n 216] [--repeat 5] [--end-to-end]

The end-to-end mode times one full oracle run per backend in a subprocess,
with FERMIONIC_NO_NUMBA switching the backend.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from fermionic.algebra import DEFAULT_PRIME
from fermionic.oracle import _kernels as K


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _low_rank(rng, nrows: int, ncols: int, r: int, p: int) -> np.ndarray:
    a = rng.integers(0, p, size=(nrows, r), dtype=np.int64)
    b = rng.integers(0, p, size=(r, ncols), dtype=np.int64)
    return K.matmul_numpy(a, b, p)


def bench_kernels(n: int, repeat: int, p: int = DEFAULT_PRIME) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng(0)
    cands = _low_rank(rng, 3 * n, n, n - 3, p)
    a = rng.integers(0, p, size=(n, n), dtype=np.int64)
    b = rng.integers(0, p, size=(n, n), dtype=np.int64)

    def insert(kernel):
        def run():
            rows = np.zeros((n, n), dtype=np.int64)
            piv = np.zeros(n, dtype=np.int64)
            count, _ = kernel(rows, piv, 0, cands, p)
            assert count == n - 3
        return run

    out = []
    pairs = [
        ("insert_rows", insert(K.insert_rows_numba), insert(K.insert_rows_numpy)),
        ("matmul", lambda: K.matmul_numba(a, b, p), lambda: K.matmul_numpy(a, b, p)),
        ("rank", lambda: K.rank_numba(cands, p), lambda: K.rank_numpy(cands, p)),
    ]
    for name, fast, slow in pairs:
        fast()  # compile outside the timing
        out.append((name, _best(fast, repeat), _best(slow, repeat)))
    # the two backends must agree
    assert np.array_equal(K.matmul_numba(a, b, p), K.matmul_numpy(a, b, p))
    assert K.rank_numba(cands, p) == K.rank_numpy(cands, p)
    return out


_SNIPPET = (
    "import time; from fermionic.oracle.oracles import run_oracle; "
    "from fermionic.oracle import _kernels; "
    "run_oracle('vm', {'M': (1,)}); t=time.perf_counter(); "
    "run_oracle('vm', {'M': (0, 2)}); run_oracle('chmix', {'k': 2, 'l': 0, 'M': (0, 3), 'Mbar': (0, 0)}); "
    "print(_kernels.backend_name(), time.perf_counter()-t)"
)


def bench_end_to_end() -> list[tuple[str, float]]:
    out = []
    for flag in ("0", "1"):
        env = dict(os.environ, FERMIONIC_NO_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", _SNIPPET], env=env, capture_output=True, text=True, check=True)
        name, secs = res.stdout.split()
        out.append((name, float(secs)))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=216)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if not K.HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return 1
    print(f"n={args.n}  best of {args.repeat}")
    print(f"{'kernel':<12} {'numba [ms]':>11} {'numpy [ms]':>11} {'speedup':>8}")
    for name, fast, slow in bench_kernels(args.n, args.repeat):
        print(f"{name:<12} {fast * 1e3:11.2f} {slow * 1e3:11.2f} {slow / fast:8.1f}x")
    if args.end_to_end:
        for name, secs in bench_end_to_end():
            print(f"oracle run ({name}): {secs:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
