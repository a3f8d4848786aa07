"""Edit-distance kernels: numba-jitted with a pure-numpy fallback.

These inner loops dominate evaluation time on large corpora.  The jitted
path is used whenever numba imports cleanly; set ``RADTREE_NO_NUMBA=1`` to
force the numpy path (benchmarks/bench_kernels.py compares the two).
Both paths produce identical matrices, so tracebacks are backend-agnostic.
"""

from __future__ import annotations

import os

import numpy as np


def _nop_njit(*args, **kwargs):
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(func):
        return func

    return wrap


NUMBA_DISABLED = os.environ.get("RADTREE_NO_NUMBA", "") not in ("", "0")
try:
    if NUMBA_DISABLED:
        raise ImportError("numba disabled via RADTREE_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    njit = _nop_njit
    HAVE_NUMBA = False


def encode(text: str) -> np.ndarray:
    """Unicode scalar values of ``text`` as an int32 array."""
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32).astype(np.int32)


@njit(cache=True)
def _distance_jit(a, b):
    n = a.shape[0]
    m = b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    prev = np.empty(m + 1, np.int32)
    cur = np.empty(m + 1, np.int32)
    for j in range(m + 1):
        prev[j] = j
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            d = prev[j - 1] + cost
            if prev[j] + 1 < d:
                d = prev[j] + 1
            if cur[j - 1] + 1 < d:
                d = cur[j - 1] + 1
            cur[j] = d
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True)
def _matrix_jit(a, b):
    n = a.shape[0]
    m = b.shape[0]
    d = np.empty((n + 1, m + 1), np.int32)
    for j in range(m + 1):
        d[0, j] = j
    for i in range(1, n + 1):
        d[i, 0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            best = d[i - 1, j - 1] + cost
            if d[i - 1, j] + 1 < best:
                best = d[i - 1, j] + 1
            if d[i, j - 1] + 1 < best:
                best = d[i, j - 1] + 1
            d[i, j] = best
    return d


def _close_row(row: np.ndarray, ramp: np.ndarray) -> np.ndarray:
    # Insertion chain row[j] = min_{k<=j} row[k] + (j-k), computed as a
    # prefix-min of row[k]-k shifted back by +j.
    return np.minimum(row, np.minimum.accumulate(row - ramp) + ramp)


def _distance_np(a: np.ndarray, b: np.ndarray) -> int:
    n, m = a.shape[0], b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    ramp = np.arange(m + 1, dtype=np.int32)
    prev = ramp.copy()
    cur = np.empty(m + 1, np.int32)
    for i in range(1, n + 1):
        cur[0] = i
        np.minimum(prev[:-1] + (b != a[i - 1]), prev[1:] + 1, out=cur[1:])
        prev = _close_row(cur, ramp)
    return int(prev[m])


def _matrix_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, m = a.shape[0], b.shape[0]
    d = np.empty((n + 1, m + 1), np.int32)
    ramp = np.arange(m + 1, dtype=np.int32)
    d[0] = ramp
    row = np.empty(m + 1, np.int32)
    for i in range(1, n + 1):
        row[0] = i
        np.minimum(d[i - 1, :-1] + (b != a[i - 1]), d[i - 1, 1:] + 1, out=row[1:])
        d[i] = _close_row(row, ramp)
    return d


if HAVE_NUMBA:
    _distance_impl = _distance_jit
    _matrix_impl = _matrix_jit
else:
    _distance_impl = _distance_np
    _matrix_impl = _matrix_np


def distance(a_codes: np.ndarray, b_codes: np.ndarray) -> int:
    """Unit-cost edit distance between two encoded strings."""
    return int(_distance_impl(a_codes, b_codes))


def matrix(a_codes: np.ndarray, b_codes: np.ndarray) -> np.ndarray:
    """Full (n+1, m+1) distance matrix for alignment traceback."""
    return _matrix_impl(a_codes, b_codes)
