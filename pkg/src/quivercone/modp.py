"""Linear algebra over prime fields, numpy-backed.

Entries live in int64; every prime used here satisfies (p-1)^2 * nrows < 2^63
for the matrix sizes we handle, so products are reduced eagerly.
"""

from __future__ import annotations

import numpy as np

# prime used internally for rank probes on integer matrices
RANK_PROBE_PRIME = 2_147_483_647  # 2^31 - 1


def rref_mod(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int], list[int]]:
    """In-place-style RREF of ``mat`` mod p.

    Returns (reduced matrix, pivot column list, original indices of pivot rows).
    """
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    row_ids = list(range(nrows))
    pivots: list[int] = []
    pivot_rows: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
            row_ids[r], row_ids[pr] = row_ids[pr], row_ids[r]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - col[mask, None] * a[r]) % p
        pivots.append(c)
        pivot_rows.append(row_ids[r])
        r += 1
    return a[:r], pivots, pivot_rows


def rank_mod(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref_mod(mat, p)[1])


def nullspace_mod(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of the kernel mod p, one vector per row of the result."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        n = a.shape[1] if a.ndim == 2 else 0
        return np.eye(n, dtype=np.int64)
    red, pivots, _ = rref_mod(a, p)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(red[r, fc])) % p
    return basis


def kernel_dim_mod(mat: np.ndarray, p: int) -> int:
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        return a.shape[1] if a.ndim == 2 else 0
    return a.shape[1] - rank_mod(a, p)
