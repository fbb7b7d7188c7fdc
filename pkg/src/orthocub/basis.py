"""Orthonormal Chebyshev product basis on the reference cube.

Basis functions are indexed by multi-indices of total degree <= n in a
graded order: total degree ascending, first component descending within
each degree.  Everything reduces to univariate three-term recurrences,
including the closed-form partial derivatives, which come out of the
ultraspherical (Jacobi) family.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _backend
from .errors import OrthocubError


@dataclass(frozen=True)
class IndexBasis:
    """Ordered multi-index set spanning total degree <= degree."""

    dim: int
    degree: int
    indices: tuple

    @property
    def size(self):
        return len(self.indices)

    def __len__(self):
        return len(self.indices)

    @cached_property
    def exponents(self):
        """Index tuples as an (N, dim) integer array."""
        return np.asarray(self.indices, dtype=np.intp)


@dataclass(frozen=True)
class DerivativeOrder:
    """Multi-order alpha of a partial derivative, total order <= 2."""

    alpha: tuple

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) not in (2, 3):
            raise OrthocubError(f"alpha needs 2 or 3 components, got {len(alpha)}")
        if any(a < 0 for a in alpha):
            raise OrthocubError(f"derivative orders must be nonnegative, got {alpha}")
        if sum(alpha) > 2:
            raise OrthocubError(f"total derivative order {sum(alpha)} exceeds 2")

    @property
    def total(self):
        return sum(self.alpha)


def _as_alpha(alpha, dim):
    order = alpha if isinstance(alpha, DerivativeOrder) else DerivativeOrder(tuple(alpha))
    if len(order.alpha) != dim:
        raise OrthocubError(f"alpha has {len(order.alpha)} components, expected {dim}")
    return order


def grlex_indices(d, n):
    """Graded multi-index basis for total degree <= n in d variables.

    Within one total degree the first component decreases; equal first
    components break the tie the same way on the second.

    Parameters
    ----------
    d : int
        Dimension, 2 or 3.
    n : int
        Maximal total degree.

    Returns
    -------
    IndexBasis
    """
    if d not in (2, 3):
        raise OrthocubError(f"dimension must be 2 or 3, got {d}")
    if n < 0:
        raise OrthocubError(f"degree must be nonnegative, got {n}")
    out = []
    for g in range(n + 1):
        if d == 2:
            for h in range(g, -1, -1):
                out.append((h, g - h))
        else:
            for h in range(g, -1, -1):
                for k in range(g - h, -1, -1):
                    out.append((h, k, g - h - k))
    return IndexBasis(dim=d, degree=n, indices=tuple(out))


def chebyshev_values(t, smax):
    """Plain Chebyshev values T_s(t) for s = 0..smax, shape (K, smax+1)."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty((t.shape[0], smax + 1))
    out[:, 0] = 1.0
    if smax >= 1:
        out[:, 1] = t
    for s in range(2, smax + 1):
        out[:, s] = 2.0 * t * out[:, s - 1] - out[:, s - 2]
    return out


def chebyshev_orthonormal(s, t):
    """p_s(t) = sqrt((2 - delta_{s,0}) / pi) T_s(t).

    Orthonormal against the univariate Chebyshev weight; accepts scalars
    or arrays and evaluates through the T_s recurrence.
    """
    if s < 0:
        raise OrthocubError(f"degree must be nonnegative, got {s}")
    t = np.asarray(t, dtype=np.float64)
    tab = _backend.chebyshev_table(np.ascontiguousarray(t.ravel()), s)
    vals = tab[:, s].reshape(t.shape)
    return float(vals) if vals.ndim == 0 else vals


def jacobi_table(a, b, kmax, t):
    """Values P_k^{(a,b)}(t) for k = 0..kmax, shape (K, kmax+1).

    Normalization P_k^{(a,b)}(1) = C(k+a, k); standard three-term
    recurrence with the k=1 term ((a+b+2)t + (a-b))/2.
    """
    if a <= -1 or b <= -1:
        raise OrthocubError("Jacobi parameters must exceed -1")
    t = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty((t.shape[0], kmax + 1))
    out[:, 0] = 1.0
    if kmax >= 1:
        out[:, 1] = 0.5 * ((a + b + 2.0) * t + (a - b))
    for k in range(2, kmax + 1):
        c0 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c1 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
        c2 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b)
        c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        out[:, k] = ((c1 + c2 * t) * out[:, k - 1] - c3 * out[:, k - 2]) / c0
    return out


def jacobi_eval(a, b, k, t):
    """Jacobi polynomial P_k^{(a,b)}(t); zero for k < 0 by convention."""
    if a <= -1 or b <= -1:
        raise OrthocubError("Jacobi parameters must exceed -1")
    t = np.asarray(t, dtype=np.float64)
    if k < 0:
        z = np.zeros(t.shape)
        return float(z) if z.ndim == 0 else z
    tab = jacobi_table(a, b, k, t.ravel())
    vals = tab[:, k].reshape(t.shape)
    return float(vals) if vals.ndim == 0 else vals


def vandermonde_chebyshev(points, basis):
    """Vandermonde matrix of the product basis at reference points.

    Parameters
    ----------
    points : array_like, shape (M, d)
        Points in reference cube coordinates.
    basis : IndexBasis

    Returns
    -------
    ndarray, shape (M, N)
        Entry (i, j) = psi_j(Q_i); columns follow basis.indices.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if pts.shape[1] != basis.dim:
        raise OrthocubError(
            f"points have dimension {pts.shape[1]}, basis expects {basis.dim}")
    tables = [_backend.chebyshev_table(np.ascontiguousarray(pts[:, k]), basis.degree)
              for k in range(basis.dim)]
    return _backend.product_vandermonde(tables, basis.exponents)


def chebyshev_primitive(s):
    """Chebyshev coefficients of an antiderivative of T_s.

    Integration constant zero: int T_0 = T_1, int T_1 = T_2 / 4 and
    int T_s = T_{s+1} / (2(s+1)) - T_{s-1} / (2(s-1)) for s >= 2.

    Returns
    -------
    ndarray, shape (s + 2,)
        Coefficients low degree first.
    """
    if s < 0:
        raise OrthocubError(f"degree must be nonnegative, got {s}")
    c = np.zeros(s + 2)
    if s == 0:
        c[1] = 1.0
    elif s == 1:
        c[2] = 0.25
    else:
        c[s + 1] = 1.0 / (2.0 * (s + 1))
        c[s - 1] = -1.0 / (2.0 * (s - 1))
    return c


def chebyshev_primitive_table(t, smax):
    """Antiderivative values of T_s at t for s = 0..smax, shape (K, smax+1)."""
    T = chebyshev_values(t, smax + 1)
    out = np.empty((T.shape[0], smax + 1))
    out[:, 0] = T[:, 1]
    if smax >= 1:
        out[:, 1] = 0.25 * T[:, 2]
    for s in range(2, smax + 1):
        out[:, s] = T[:, s + 1] / (2.0 * (s + 1)) - T[:, s - 1] / (2.0 * (s - 1))
    return out


def pochhammer(u, v):
    """Rising factorial u (u+1) ... (u+v-1); empty product 1 for v = 0."""
    if v < 0 or int(v) != v:
        raise OrthocubError(f"pochhammer order must be a nonnegative integer, got {v}")
    out = 1.0
    for i in range(int(v)):
        out *= u + i
    return out


def gamma_ratio_half(u):
    """Gamma(u+1) / Gamma(u+1/2) for integer u >= 0, via Pochhammer products.

    Gamma(u+1) = (1)_u and Gamma(u+1/2) = (1/2)_u sqrt(pi), so the ratio
    equals (1)_u / ((1/2)_u sqrt(pi)); no Gamma function is evaluated.
    """
    if u < 0 or int(u) != u:
        raise OrthocubError(f"argument must be a nonnegative integer, got {u}")
    return pochhammer(1.0, u) / (pochhammer(0.5, u) * math.sqrt(math.pi))


def _derivative_axis_table(t, smax, a):
    """Values of the a-th derivative of p_s at t, s = 0..smax, shape (K, smax+1).

    For a >= 1 the derivative of T_s collapses onto one Jacobi value:
    T_s^(a)(t) = 2^-a (s)_a sqrt(pi) [Gamma(s+1)/Gamma(s+1/2)]
                 P_{s-a}^{(a-1/2, a-1/2)}(t),
    and columns with s < a stay zero (the Gamma(0) conventions).
    """
    t = np.ascontiguousarray(t, dtype=np.float64)
    if a == 0:
        return _backend.chebyshev_table(t, smax)
    out = np.zeros((t.shape[0], smax + 1))
    if smax < a:
        return out
    jac = jacobi_table(a - 0.5, a - 0.5, smax - a, t)
    base = math.sqrt(2.0) * 0.5 ** a
    for s in range(a, smax + 1):
        out[:, s] = base * pochhammer(s, a) * gamma_ratio_half(s) * jac[:, s - a]
    return out


def diff_moments_ref_batch(Q, alpha, basis):
    """Rows of reference derivative moments at many points, shape (K, N)."""
    order = _as_alpha(alpha, basis.dim)
    pts = np.atleast_2d(np.asarray(Q, dtype=np.float64))
    if pts.shape[1] != basis.dim:
        raise OrthocubError(
            f"points have dimension {pts.shape[1]}, basis expects {basis.dim}")
    tables = [_derivative_axis_table(pts[:, k], basis.degree, order.alpha[k])
              for k in range(basis.dim)]
    return _backend.product_vandermonde(tables, basis.exponents)


def diff_moments_ref(Q, alpha, basis):
    """Reference moments of the derivative-evaluation functional at Q.

    Entry j is the alpha partial derivative of psi_j at Q in reference
    coordinates; |alpha| = 0 reproduces the plain Vandermonde row.
    """
    Q = np.asarray(Q, dtype=np.float64)
    return diff_moments_ref_batch(Q.reshape(1, -1), alpha, basis)[0]
