"""Hot numeric kernels for layer-pair weight matrices.

Graph construction evaluates, for every node pair between consecutive
layers, the minimum fret-wise distance over all position pairs - an
O(N1 * N2 * P * Q) loop that dominates build time on long progressions.
The loop is JIT-compiled with numba when available; a vectorized numpy
fallback computes the same float64 values.

Backend selection: set ``CHORDTONE_KERNEL`` to ``numba`` or ``numpy``.
Unset, the JIT path is used when numba imports.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "CHORDTONE_KERNEL"

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is an install-time choice
    HAS_NUMBA = False


def _min_distance_matrix_numpy(
    strings_a: np.ndarray,
    frets_a: np.ndarray,
    strings_b: np.ndarray,
    frets_b: np.ndarray,
    penalty: float,
) -> np.ndarray:
    n1, p = strings_a.shape
    n2, q = strings_b.shape
    out = np.empty((n1, n2), dtype=np.float64)
    # Broadcasting materializes (chunk, n2, p, q); cap the intermediate size.
    chunk = max(1, int(4_000_000 // max(1, n2 * p * q)))
    for lo in range(0, n1, chunk):
        hi = min(n1, lo + chunk)
        dfret = np.abs(frets_a[lo:hi, None, :, None] - frets_b[None, :, None, :])
        dstring = np.abs(strings_a[lo:hi, None, :, None] - strings_b[None, :, None, :])
        out[lo:hi] = (dfret + penalty * dstring).min(axis=(2, 3))
    return out


if HAS_NUMBA:

    @njit(cache=True)
    def _min_distance_matrix_numba(strings_a, frets_a, strings_b, frets_b, penalty):
        n1, p = strings_a.shape
        n2, q = strings_b.shape
        out = np.empty((n1, n2), dtype=np.float64)
        for i in range(n1):
            for j in range(n2):
                best = 1e300
                for x in range(p):
                    for y in range(q):
                        d = abs(frets_a[i, x] - frets_b[j, y]) + penalty * abs(
                            strings_a[i, x] - strings_b[j, y]
                        )
                        if d < best:
                            best = d
                out[i, j] = best
        return out


def active_backend() -> str:
    """Resolve the kernel backend from the environment."""
    flag = os.environ.get(ENV_FLAG, "").strip().lower()
    if flag == "numpy":
        return "numpy"
    if flag == "numba":
        if not HAS_NUMBA:
            raise RuntimeError(f"{ENV_FLAG}=numba but numba is not installed")
        return "numba"
    if flag:
        raise RuntimeError(f"unrecognized {ENV_FLAG} value {flag!r}")
    return "numba" if HAS_NUMBA else "numpy"


def min_distance_matrix(
    strings_a: np.ndarray,
    frets_a: np.ndarray,
    strings_b: np.ndarray,
    frets_b: np.ndarray,
    penalty: float,
    backend: str | None = None,
) -> np.ndarray:
    """Minimum pairwise fret-wise distance between two node batches.

    Inputs are (node, position) int arrays of string indices and frets;
    the result is a float64 (N1, N2) matrix of
    ``min over (x, y) of |fret_a - fret_b| + penalty * |string_a - string_b|``.
    """
    strings_a = np.ascontiguousarray(strings_a, dtype=np.int64)
    frets_a = np.ascontiguousarray(frets_a, dtype=np.int64)
    strings_b = np.ascontiguousarray(strings_b, dtype=np.int64)
    frets_b = np.ascontiguousarray(frets_b, dtype=np.int64)
    if strings_a.shape != frets_a.shape or strings_b.shape != frets_b.shape:
        raise ValueError("string/fret arrays must have matching shapes")
    chosen = backend or active_backend()
    if chosen == "numba":
        return _min_distance_matrix_numba(
            strings_a, frets_a, strings_b, frets_b, float(penalty)
        )
    return _min_distance_matrix_numpy(
        strings_a, frets_a, strings_b, frets_b, float(penalty)
    )
