"""Patience-sorting inner loops, jit-compiled when numba is available.

The binary search is written out by hand so the same source compiles under
numba and runs unmodified as plain Python when numba is absent.
"""

from __future__ import annotations

import numpy as np


def _pile_indices_impl(values, out):
    # Leftmost pile whose top exceeds the card; tops stay sorted ascending.
    n = values.shape[0]
    tops = np.empty(n, dtype=values.dtype)
    npiles = 0
    for i in range(n):
        x = values[i]
        lo = 0
        hi = npiles
        while lo < hi:
            mid = (lo + hi) >> 1
            if tops[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        tops[lo] = x
        out[i] = lo
        if lo == npiles:
            npiles += 1
    return npiles


def _lis_length_impl(values):
    n = values.shape[0]
    tops = np.empty(n, dtype=values.dtype)
    npiles = 0
    for i in range(n):
        x = values[i]
        lo = 0
        hi = npiles
        while lo < hi:
            mid = (lo + hi) >> 1
            if tops[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        tops[lo] = x
        if lo == npiles:
            npiles += 1
    return npiles


# Compiled lazily on first use: importing numba costs around a second, which
# would otherwise tax every command, including ones that never sort a card.
_pile_indices = None
_lis_length = None


def _load_kernels() -> None:
    global _pile_indices, _lis_length
    try:
        from numba import njit

        _pile_indices = njit(cache=True)(_pile_indices_impl)
        _lis_length = njit(cache=True)(_lis_length_impl)
    except ImportError:  # pragma: no cover
        _pile_indices = _pile_indices_impl
        _lis_length = _lis_length_impl


def _as_kernel_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional sequence of values")
    if arr.dtype.kind in "iu":
        return np.ascontiguousarray(arr, dtype=np.int64)
    return np.ascontiguousarray(arr, dtype=np.float64)


def lis_length_kernel(values) -> int:
    """Length of the longest strictly increasing subsequence of distinct values."""
    arr = _as_kernel_array(values)
    if arr.size == 0:
        return 0
    if _lis_length is None:
        _load_kernels()
    return int(_lis_length(arr))


def pile_indices_kernel(values) -> tuple[np.ndarray, int]:
    """Per-card pile index under patience sorting, plus the pile count."""
    arr = _as_kernel_array(values)
    out = np.empty(arr.size, dtype=np.int64)
    if arr.size == 0:
        return out, 0
    if _pile_indices is None:
        _load_kernels()
    npiles = int(_pile_indices(arr, out))
    return out, npiles
