"""Pure numpy fallbacks for the compiled kernels.

Each function matches the compiled version in orthocub._kernels operation
for operation: same recurrences, same per-point accumulation order for the
Halton digits, same multiply order in the basis products.  The only place
the two backends may differ in the last bits is the weighted moment
accumulation, where the fallback uses BLAS dot products over chunks.
"""

import math

import numpy as np

BACKEND = "python"

# points per chunk when streaming over large clouds; keeps the scratch
# Vandermonde block around chunk * N * 8 bytes
_CHUNK = 4096


def chebyshev_table(t, smax):
    """Orthonormal Chebyshev values p_s(t) for s = 0..smax.

    p_s(t) = sqrt((2 - delta_{s,0}) / pi) * T_s(t), orthonormal on [-1, 1]
    against the weight 1 / sqrt(1 - t^2).

    Parameters
    ----------
    t : ndarray, shape (K,)
        Evaluation points.
    smax : int
        Largest degree.

    Returns
    -------
    ndarray, shape (K, smax + 1)
    """
    t = np.ascontiguousarray(t, dtype=np.float64)
    K = t.shape[0]
    out = np.empty((K, smax + 1))
    out[:, 0] = 1.0
    if smax >= 1:
        out[:, 1] = t
    for s in range(2, smax + 1):
        out[:, s] = 2.0 * t * out[:, s - 1] - out[:, s - 2]
    norms = np.full(smax + 1, math.sqrt(2.0 / math.pi))
    norms[0] = 1.0 / math.sqrt(math.pi)
    out *= norms
    return out


def product_vandermonde(tables, exps):
    """Product-basis Vandermonde from per-axis value tables.

    V[i, j] = prod_k tables[k][i, exps[j, k]], multiplied in axis order.

    Parameters
    ----------
    tables : sequence of ndarray
        One (K, smax + 1) table per axis.
    exps : ndarray, shape (N, d)
        Exponent rows.

    Returns
    -------
    ndarray, shape (K, N)
    """
    exps = np.asarray(exps, dtype=np.intp)
    V = tables[0][:, exps[:, 0]].copy()
    for k in range(1, exps.shape[1]):
        V *= tables[k][:, exps[:, k]]
    return V


def accumulate_weighted_moments(tables, exps, vals):
    """m[j] = sum_i vals[i] * prod_k tables[k][i, exps[j, k]].

    Streams over the points in chunks so the full K x N Vandermonde is
    never materialized.
    """
    exps = np.asarray(exps, dtype=np.intp)
    vals = np.ascontiguousarray(vals, dtype=np.float64)
    K = vals.shape[0]
    m = np.zeros(exps.shape[0])
    for lo in range(0, K, _CHUNK):
        hi = min(lo + _CHUNK, K)
        block = [tab[lo:hi] for tab in tables]
        m += vals[lo:hi] @ product_vandermonde(block, exps)
    return m


def halton_points(L, dim, start=1):
    """Halton sequence points in [0, 1)^dim, bases 2, 3, 5.

    Point i uses sequence index start + i; the default start of 1 skips
    the origin.  Each coordinate is the radical inverse of the index,
    accumulated least-significant digit first.

    Returns
    -------
    ndarray, shape (L, dim)
    """
    if not 1 <= dim <= 3:
        raise ValueError("dim must be 1, 2 or 3")
    bases = (2, 3, 5)[:dim]
    idx0 = np.arange(start, start + L, dtype=np.int64)
    out = np.empty((L, dim))
    for k, b in enumerate(bases):
        i = idx0.copy()
        r = np.zeros(L)
        denom = np.ones(L)
        active = i > 0
        while active.any():
            denom[active] *= b
            r[active] += (i[active] % b) / denom[active]
            i[active] //= b
            active = i > 0
        out[:, k] = r
    return out
