"""Vectorized scan kernels shared by the verification code paths.

Pairwise scans are chunked so memory stays bounded; when DNACODES_THREADS
asks for more than one worker the chunk grid is sharded across a thread
pool (numpy releases the GIL) and the partial minima are reduced
deterministically, so results never depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

_CHUNK = 1024


def thread_count() -> int:
    """Worker cap from DNACODES_THREADS (0 or unset = auto)."""
    raw = os.environ.get("DNACODES_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        return 1
    if value <= 0:
        return min(4, os.cpu_count() or 1)
    return value


def _block_pairs(n_rows: int, cross: bool):
    starts = range(0, n_rows, _CHUNK)
    for i0 in starts:
        for j0 in starts:
            if cross or j0 >= i0:
                yield i0, j0


def _block_min(a: np.ndarray, b: np.ndarray, i0: int, j0: int,
               same: bool, skip_equal: bool) -> int:
    """Minimum Hamming distance between row blocks a[i0:...] and b[j0:...]."""
    ab = a[i0:i0 + _CHUNK]
    bb = b[j0:j0 + _CHUNK]
    d = (ab[:, None, :] != bb[None, :, :]).sum(axis=2, dtype=np.int32)
    if same and i0 == j0:
        # Only the strict upper triangle holds distinct pairs.
        d[np.tril_indices(d.shape[0], k=0, m=d.shape[1])] = np.iinfo(np.int32).max
    elif skip_equal:
        d[d == 0] = np.iinfo(np.int32).max
    return int(d.min()) if d.size else np.iinfo(np.int32).max


def min_pairwise_hamming(mat: np.ndarray) -> int:
    """Min Hamming distance over unordered distinct row pairs of ``mat``."""
    m = mat.shape[0]
    if m < 2:
        raise ValueError("need at least two rows")
    jobs = list(_block_pairs(m, cross=False))
    best = _map_min(lambda ij: _block_min(mat, mat, ij[0], ij[1], True, False), jobs)
    return best


def min_cross_hamming(a: np.ndarray, b: np.ndarray,
                      skip_equal: bool = False) -> int | None:
    """Min Hamming distance over all ordered row pairs (a_i, b_j).

    With ``skip_equal`` pairs at distance zero (identical rows) are ignored,
    which implements guards of the form "for all x, y with op(x) != y".
    Returns None when the guard excludes every pair (vacuous quantifier).
    """
    if a.shape[0] == 0 or b.shape[0] == 0:
        raise ValueError("need at least one row on each side")
    jobs = [(i0, j0) for i0 in range(0, a.shape[0], _CHUNK)
            for j0 in range(0, b.shape[0], _CHUNK)]
    best = _map_min(lambda ij: _block_min(a, b, ij[0], ij[1], False, skip_equal), jobs)
    return None if best == np.iinfo(np.int32).max else best


def _map_min(fn, jobs) -> int:
    workers = thread_count()
    if workers <= 1 or len(jobs) < 4:
        return min(fn(j) for j in jobs)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return min(pool.map(fn, jobs))
