# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: basis tables, product Vandermonde blocks, streamed
weighted moment accumulation and Halton point generation.

Mirrors orthocub._kernels_py operation for operation so both backends
agree to the last bits wherever the fallback does not defer to BLAS.
"""

from libc.math cimport sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


def chebyshev_table(t, smax):
    """Orthonormal Chebyshev values p_s(t) for s = 0..smax, shape (K, smax+1)."""
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef Py_ssize_t K = tv.shape[0]
    cdef Py_ssize_t S = smax
    out = np.empty((K, S + 1))
    cdef double[:, ::1] T = out
    cdef Py_ssize_t i, s
    cdef double ti, n0, n1
    n0 = 1.0 / sqrt(np.pi)
    n1 = sqrt(2.0 / np.pi)
    for i in range(K):
        ti = tv[i]
        T[i, 0] = 1.0
        if S >= 1:
            T[i, 1] = ti
        for s in range(2, S + 1):
            T[i, s] = 2.0 * ti * T[i, s - 1] - T[i, s - 2]
        T[i, 0] = T[i, 0] * n0
        for s in range(1, S + 1):
            T[i, s] = T[i, s] * n1
    return out


def product_vandermonde(tables, exps):
    """V[i, j] = prod_k tables[k][i, exps[j, k]], multiplied in axis order."""
    cdef Py_ssize_t d = len(tables)
    cdef Py_ssize_t[:, ::1] E = np.ascontiguousarray(exps, dtype=np.intp)
    cdef double[:, ::1] T0 = tables[0]
    cdef double[:, ::1] T1 = tables[1]
    cdef double[:, ::1] T2 = tables[2] if d == 3 else tables[0]
    cdef Py_ssize_t K = T0.shape[0]
    cdef Py_ssize_t N = E.shape[0]
    out = np.empty((K, N))
    cdef double[:, ::1] V = out
    cdef Py_ssize_t i, j
    cdef double v
    for i in range(K):
        for j in range(N):
            v = T0[i, E[j, 0]] * T1[i, E[j, 1]]
            if d == 3:
                v = v * T2[i, E[j, 2]]
            V[i, j] = v
    return out


def accumulate_weighted_moments(tables, exps, vals):
    """m[j] = sum_i vals[i] * prod_k tables[k][i, exps[j, k]]."""
    cdef Py_ssize_t d = len(tables)
    cdef Py_ssize_t[:, ::1] E = np.ascontiguousarray(exps, dtype=np.intp)
    cdef double[:, ::1] T0 = tables[0]
    cdef double[:, ::1] T1 = tables[1]
    cdef double[:, ::1] T2 = tables[2] if d == 3 else tables[0]
    cdef double[::1] c = np.ascontiguousarray(vals, dtype=np.float64)
    cdef Py_ssize_t K = T0.shape[0]
    cdef Py_ssize_t N = E.shape[0]
    out = np.zeros(N)
    cdef double[::1] m = out
    cdef Py_ssize_t i, j
    cdef double v, ci
    for i in range(K):
        ci = c[i]
        for j in range(N):
            v = T0[i, E[j, 0]] * T1[i, E[j, 1]]
            if d == 3:
                v = v * T2[i, E[j, 2]]
            m[j] += ci * v
    return out


def halton_points(L, dim, start=1):
    """Halton sequence points in [0, 1)^dim, bases 2, 3, 5."""
    if not 1 <= dim <= 3:
        raise ValueError("dim must be 1, 2 or 3")
    cdef Py_ssize_t Lc = L
    cdef Py_ssize_t d = dim
    cdef long long s0 = start
    out = np.empty((Lc, d))
    cdef double[:, ::1] P = out
    cdef long long[3] bases
    bases[0] = 2
    bases[1] = 3
    bases[2] = 5
    cdef Py_ssize_t i, k
    cdef long long n, b
    cdef double r, denom
    for i in range(Lc):
        for k in range(d):
            b = bases[k]
            n = s0 + i
            r = 0.0
            denom = 1.0
            while n > 0:
                denom *= b
                r += (n % b) / denom
                n //= b
            P[i, k] = r
    return out
