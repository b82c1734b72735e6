"""Shortest-path distances in H(n, k) computed from labels alone.

Let dR(s) and dP(s) be the distances from a suffix ``s`` (a vertex of the
copy of H(n, len(s)) it lives in) to that copy's root and to its peripheral
set.  They satisfy, for a leading digit ``a`` and the remaining suffix ``s'``::

    a == 0:  dR(s) = dR(s'),      dP(s) = dR(s') + 1
    a != 0:  dR(s) = dP(s') + 1,  dP(s) = dP(s')

with base case (0, 1) for the digit 0 and (1, 0) otherwise.  A query strips
the common prefix and combines the helpers of the two remaining suffixes
once, so every query is O(k).
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import Label, Params, check_label


def _helpers(suffix: Sequence[int]) -> tuple[int, int]:
    dr, dp = (0, 1) if suffix[-1] == 0 else (1, 0)
    for d in reversed(suffix[:-1]):
        if d == 0:
            dr, dp = dr, dr + 1
        else:
            dr, dp = dp + 1, dp
    return dr, dp


def dist_to_root(suffix: Sequence[int]) -> int:
    """Distance from ``suffix`` to the all-zero vertex of H(n, len(suffix))."""
    if not suffix:
        raise ValueError("empty suffix")
    return _helpers(suffix)[0]


def dist_to_periphery(suffix: Sequence[int]) -> int:
    """Distance from ``suffix`` to the nearest all-nonzero vertex of H(n, len(suffix))."""
    if not suffix:
        raise ValueError("empty suffix")
    return _helpers(suffix)[1]


def _combine(a: int, b: int, xs: Label, ys: Label) -> int:
    if not xs:
        return 1  # same K_n block
    xr, xp = _helpers(xs)
    yr, yp = _helpers(ys)
    if a == 0:
        return xr + 1 + yp
    if b == 0:
        return yr + 1 + xp
    return min(xp + 2 + yp, xr + 1 + yr)


def distance(x: Sequence[int], y: Sequence[int], params: Params) -> int:
    x = check_label(x, params)
    y = check_label(y, params)
    for i in range(params.k):
        if x[i] != y[i]:
            return _combine(x[i], y[i], x[i + 1 :], y[i + 1 :])
    return 0


def diametral_pair(params: Params) -> tuple[Label, Label]:
    z01 = tuple(i % 2 for i in range(params.k))
    z10 = tuple(1 - d for d in z01)
    return z01, z10


# ---------------------------------------------------------------------------
# batched form, same recursion over numpy arrays


def _digit_table(params: Params) -> np.ndarray:
    n, k = params.n, params.k
    ids = np.arange(params.order, dtype=np.int64)
    digits = np.empty((params.order, k), dtype=np.int64)
    for pos in range(k - 1, -1, -1):
        ids, digits[:, pos] = np.divmod(ids, n)
    return digits


def helper_tables(params: Params) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Digits plus dR/dP for every vertex and every suffix start.

    ``dr[v, j]`` is dR of the suffix of ``v`` starting at 0-based position
    ``j``; column ``k`` is a placeholder for the empty suffix.
    """
    digits = _digit_table(params)
    num, k = digits.shape
    dr = np.zeros((num, k + 1), dtype=np.int64)
    dp = np.zeros((num, k + 1), dtype=np.int64)
    last = digits[:, k - 1] == 0
    dr[:, k - 1] = np.where(last, 0, 1)
    dp[:, k - 1] = np.where(last, 1, 0)
    for j in range(k - 2, -1, -1):
        zero = digits[:, j] == 0
        dr[:, j] = np.where(zero, dr[:, j + 1], dp[:, j + 1] + 1)
        dp[:, j] = np.where(zero, dr[:, j + 1] + 1, dp[:, j + 1])
    return digits, dr, dp


def distances_from(source: int, params: Params, tables=None) -> np.ndarray:
    """Oracle distances from vertex id ``source`` to every vertex."""
    digits, dr, dp = tables if tables is not None else helper_tables(params)
    k = params.k
    diff = digits != digits[source]
    same = ~diff.any(axis=1)
    first = np.where(same, 0, diff.argmax(axis=1))
    rest = first + 1
    rows = np.arange(len(digits))
    xr, xp = dr[source, rest], dp[source, rest]
    yr, yp = dr[rows, rest], dp[rows, rest]
    a = digits[source, first]
    b = digits[rows, first]
    out = np.minimum(xp + 2 + yp, xr + 1 + yr)
    out = np.where(a == 0, xr + 1 + yp, out)
    out = np.where(b == 0, yr + 1 + xp, out)
    out = np.where(rest == k, 1, out)
    out[same] = 0
    return out
