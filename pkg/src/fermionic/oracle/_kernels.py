"""Hot loops of the oracle: row reduction and products over Z/pZ.

Every kernel has a numba version and a vectorised numpy version.  The numba
path is used when numba imports and ``FERMIONIC_NO_NUMBA`` is unset or "0".
All arrays are int64 with entries in [0, p); p < 2**31 keeps a*b + c inside
int64.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
    _jit = njit(cache=True)
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def _jit(fn):
        return fn

USE_NUMBA = HAVE_NUMBA and os.environ.get("FERMIONIC_NO_NUMBA", "0") in ("", "0")


@_jit
def insert_rows_numba(rows, pivots, count, cands, p):
    """Reduce each candidate against rows[:count] and append it if nonzero.

    ``rows`` must have capacity for every insertion.  Returns the new count
    and an int array marking, per candidate, the row it became (or -1).
    """
    ncols = rows.shape[1]
    placed = np.full(cands.shape[0], -1, dtype=np.int64)
    v = np.empty(ncols, dtype=np.int64)
    for ci in range(cands.shape[0]):
        for j in range(ncols):
            v[j] = cands[ci, j]
        for r in range(count):
            f = v[pivots[r]]
            if f != 0:
                row = rows[r]
                for j in range(pivots[r], ncols):
                    if row[j] != 0:
                        v[j] = (v[j] - f * row[j]) % p
        lead = -1
        for j in range(ncols):
            if v[j] != 0:
                lead = j
                break
        if lead < 0:
            continue
        inv = _powmod(v[lead], p - 2, p)
        for j in range(ncols):
            rows[count, j] = (v[j] * inv) % p
        pivots[count] = lead
        placed[ci] = count
        count += 1
    return count, placed


@_jit
def _powmod(a, e, p):
    result = 1
    a = a % p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


@_jit
def matmul_numba(a, b, p):
    # split b into 16-bit halves; partial sums then fit int64 for m < 2**15
    n, m = a.shape
    k = b.shape[1]
    lo = np.zeros((n, k), dtype=np.int64)
    hi = np.zeros((n, k), dtype=np.int64)
    for i in range(n):
        for t in range(m):
            x = a[i, t]
            if x != 0:
                for j in range(k):
                    y = b[t, j]
                    if y != 0:
                        lo[i, j] += x * (y & 0xFFFF)
                        hi[i, j] += x * (y >> 16)
    out = np.empty((n, k), dtype=np.int64)
    for i in range(n):
        for j in range(k):
            out[i, j] = (lo[i, j] % p + ((hi[i, j] % p) * 65536) % p) % p
    return out


@_jit
def rank_numba(mat, p):
    a = mat.copy()
    nr, nc = a.shape
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(nc):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _powmod(a[r, c], p - 2, p)
        for i in range(r + 1, nr):
            f = (a[i, c] * inv) % p
            if f != 0:
                for j in range(c, nc):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
        if r == nr:
            break
    return r


# -- numpy versions -------------------------------------------------------

def _insert_rows_numpy(rows, pivots, count, cands, p):
    placed = np.full(cands.shape[0], -1, dtype=np.int64)
    if cands.shape[0] == 0:
        return count, placed
    v = cands.copy()
    # reduce the whole batch against the existing rows
    for r in range(count):
        f = v[:, pivots[r]]
        nz = np.nonzero(f)[0]
        if nz.size:
            v[nz] = (v[nz] - _outer_mod(f[nz], rows[r], p)) % p
    # sequential elimination inside the batch
    for ci in range(v.shape[0]):
        nzc = np.nonzero(v[ci])[0]
        if nzc.size == 0:
            continue
        lead = nzc[0]
        inv = pow(int(v[ci, lead]), p - 2, p)
        row = (v[ci] * inv) % p
        rows[count] = row
        pivots[count] = lead
        placed[ci] = count
        count += 1
        rest = v[ci + 1 :]
        f = rest[:, lead]
        nz = np.nonzero(f)[0]
        if nz.size:
            rest[nz] = (rest[nz] - _outer_mod(f[nz], row, p)) % p
    return count, placed


def _outer_mod(f, row, p):
    return (f[:, None] * row[None, :]) % p


def _matmul_numpy(a, b, p):
    # split b into 16-bit halves so partial sums stay below 2**63
    if a.shape[1] > 2**15:
        raise ValueError("inner dimension too large for split product")
    lo = b & 0xFFFF
    hi = b >> 16
    r_lo = (a @ lo) % p
    r_hi = (a @ hi) % p
    return (r_lo + (r_hi * 65536) % p) % p


def _rank_numpy(mat, p):
    a = mat.copy()
    nr, nc = a.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        f = a[r + 1 :, c]
        nzr = np.nonzero(f)[0]
        if nzr.size:
            sub = a[r + 1 :]
            sub[nzr] = (sub[nzr] - _outer_mod(f[nzr], a[r], p)) % p
        r += 1
    return r


insert_rows_numpy = _insert_rows_numpy
matmul_numpy = _matmul_numpy
rank_numpy = _rank_numpy

if USE_NUMBA:
    insert_rows = insert_rows_numba
    matmul_mod = matmul_numba
    rank_mod = rank_numba
else:
    insert_rows = insert_rows_numpy
    matmul_mod = matmul_numpy
    rank_mod = rank_numpy


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
