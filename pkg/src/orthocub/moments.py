"""Moment vectors for the supported functional families.

Spline-bounded 2D areas go through Green's theorem: each basis moment
becomes a boundary line integral of a first-variable Chebyshev primitive,
evaluated per piece by Gauss-Legendre quadrature of sufficient order.
Discrete (QMC) measures reduce to a weighted Vandermonde column sum, and
pointwise derivatives use the closed ultraspherical form on the
reference cube with a per-axis scaling prefactor.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _backend
from .basis import _as_alpha, chebyshev_primitive_table, diff_moments_ref_batch
from .errors import OrientationWarning, OrthocubError
from .functional import MomentVector, hyperinterp_weights, warn_extrapolation


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Finitely supported measure: points plus a shared or per-point weight."""

    points: np.ndarray
    point_weight: object = 1.0

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        object.__setattr__(self, "points", pts)
        if pts.shape[0] < 1:
            raise OrthocubError("a discrete measure needs at least one point")
        w = self.point_weight
        if np.ndim(w) == 0:
            object.__setattr__(self, "point_weight", float(w))
        else:
            w = np.asarray(w, dtype=np.float64).ravel()
            if w.shape[0] != pts.shape[0]:
                raise OrthocubError("per-point weights do not match the point count")
            object.__setattr__(self, "point_weight", w)

    @property
    def weights_array(self):
        if np.ndim(self.point_weight) == 0:
            return np.full(self.points.shape[0], self.point_weight)
        return self.point_weight

    def __len__(self):
        return self.points.shape[0]


def discrete_moments(measure, box, basis, functional_tag="discrete"):
    """Moments m_j = sum_k c_k psi_j(Lambda^{-1}(P_k - C)).

    One streamed Vandermonde accumulation; never materializes the full
    K x N matrix, so million-point clouds are fine.
    """
    if measure.points.shape[1] != box.dim or basis.dim != box.dim:
        raise OrthocubError("measure, box and basis dimensions disagree")
    Q = box.to_reference(measure.points)
    tables = [_backend.chebyshev_table(np.ascontiguousarray(Q[:, k]), basis.degree)
              for k in range(basis.dim)]
    m = _backend.accumulate_weighted_moments(tables, basis.exponents,
                                             measure.weights_array)
    return MomentVector(m, basis, box, functional_tag)


def gauss_nodes_per_piece(piece_degree, n):
    """Gauss-Legendre count making the boundary moment integrals exact.

    The integrand Psi_j(Q(x(t), y(t))) y'(t) has parameter degree at
    most p(n+1) + p - 1 = p(n+2) - 1 on a degree-p piece.
    """
    return math.ceil(piece_degree * (n + 2) / 2)


def spline_cheb_moments(boundary, box, basis, nodes_per_piece=None,
                        functional_tag="spline-area"):
    """Moments of Lebesgue integration over the spline-bounded region.

    Green's theorem turns the area integral into a boundary integral of
    the first-variable primitive:

        m_j = lambda_1 * contour_int Psi_j(Lambda^{-1}((x,y) - C)) dy.

    A clockwise boundary is reversed with a warning; an open one is
    rejected, as is a boundary leaving the box.
    """
    if basis.dim != 2 or box.dim != 2:
        raise OrthocubError("spline moments are 2D only")
    if not boundary.closed:
        raise OrthocubError("boundary must be closed")
    if boundary.signed_area() < 0:
        warnings.warn("boundary runs clockwise; reversing it",
                      OrientationWarning, stacklevel=2)
        boundary = boundary.reverse()
    n = basis.degree
    count = nodes_per_piece or gauss_nodes_per_piece(boundary.piece_degree, n)
    tq, cq = _piecewise_gauss(boundary, count)
    xy = boundary(tq)
    _require_inside(xy, box)
    Q = box.to_reference(xy)
    norms = np.full(n + 1, math.sqrt(2.0 / math.pi))
    norms[0] = 1.0 / math.sqrt(math.pi)
    prim = chebyshev_primitive_table(Q[:, 0], n) * norms
    ptab = _backend.chebyshev_table(np.ascontiguousarray(Q[:, 1]), n)
    lam1 = float(box.half_lengths[0])
    m = _backend.accumulate_weighted_moments([prim, ptab], basis.exponents,
                                             lam1 * cq)
    return MomentVector(m, basis, box, functional_tag)


def _piecewise_gauss(boundary, count):
    """Parameters and dy-weighted coefficients of the piecewise rule."""
    nodes, wts = np.polynomial.legendre.leggauss(count)
    a = boundary.breaks[:-1]
    b = boundary.breaks[1:]
    half = 0.5 * (b - a)
    tq = (half[:, None] * nodes + (0.5 * (a + b))[:, None]).ravel()
    cq = (half[:, None] * wts).ravel() * boundary.sy.derivative()(tq)
    return tq, cq


def _require_inside(xy, box, tol=1e-9):
    lo = np.asarray(box.lo)
    hi = np.asarray(box.hi)
    slack = tol * np.maximum(1.0, hi - lo)
    if np.any(xy < lo - slack) or np.any(xy > hi + slack):
        raise OrthocubError("boundary exits the bounding box")


def diff_weights(bundle, box, P, alpha):
    """Weights representing the alpha partial derivative at P.

    sum_i w_i f(P_i) = (d^alpha f)(P) for every f of total degree <= n.
    The zero-order case is hyperinterpolation evaluation and shares that
    code path exactly.
    """
    order = _as_alpha(alpha, bundle.dim)
    if order.total == 0:
        return hyperinterp_weights(bundle, box, P)
    W = diff_weights_batch(bundle, box,
                           np.asarray(P, dtype=np.float64).reshape(1, -1), order)
    return W[0]


def diff_weights_batch(bundle, box, P, alpha):
    """diff_weights stacked over rows of P, shape (K, M)."""
    order = _as_alpha(alpha, bundle.dim)
    pts = np.atleast_2d(np.asarray(P, dtype=np.float64))
    if bundle.dim != box.dim or pts.shape[1] != box.dim:
        raise OrthocubError("bundle, box and point dimensions disagree")
    Q = box.to_reference(pts)
    warn_extrapolation(Q)
    m0 = diff_moments_ref_batch(Q, order, bundle.basis)
    pref = float(np.prod(box.half_lengths ** -np.asarray(order.alpha, dtype=np.float64)))
    return pref * (m0 @ bundle.weighted_vandermonde.T)


def differentiation_matrix(bundle, box, k):
    """Matrix D_k whose row i holds first-derivative weights along axis k at node P_i.

    Powers propagate: D_k^a applied to the sample vector {f(P_j)}
    reproduces {d^a f / dx_k^a (P_i)} for polynomials whose degree keeps
    the intermediate derivatives inside the exactness budget.
    """
    if not 1 <= k <= bundle.dim:
        raise OrthocubError(f"axis must lie in 1..{bundle.dim}, got {k}")
    alpha = tuple(1 if i == k - 1 else 0 for i in range(bundle.dim))
    nodes = box.from_reference(bundle.rule.nodes)
    return diff_weights_batch(bundle, box, nodes, alpha)
