"""Geometric support: spline boundaries, ball unions, Halton points, boxes."""

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline, PPoly

from . import _backend
from .errors import OrthocubError
from .functional import BoundingBox


@dataclass(frozen=True, eq=False)
class SplineBoundary:
    """Parametric curve (x(t), y(t)) of piecewise polynomials.

    One unit parameter interval per vertex gap; order 4 means cubic
    pieces, order 2 the interpolating polyline.
    """

    sx: PPoly
    sy: PPoly
    xv: np.ndarray
    yv: np.ndarray
    order: int
    end_condition: str
    closed: bool

    @property
    def piece_count(self):
        return self.sx.x.shape[0] - 1

    @property
    def piece_degree(self):
        return self.order - 1

    @property
    def pieces(self):
        """Per-piece local power coefficients, ((x coeffs, y coeffs), ...)."""
        return tuple((self.sx.c[:, i].copy(), self.sy.c[:, i].copy())
                     for i in range(self.piece_count))

    @property
    def breaks(self):
        return self.sx.x

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        return np.stack([self.sx(t), self.sy(t)], axis=-1)

    def reverse(self):
        """Same vertex set traced in the opposite direction."""
        return spline_boundary_build(self.xv[::-1], self.yv[::-1],
                                     self.order, self.end_condition)

    def signed_area(self):
        """Contour integral of x dy; positive for counterclockwise curves."""
        # x y' has degree 2p-1 per piece, so p Gauss points are exact
        nodes, wts = np.polynomial.legendre.leggauss(max(self.piece_degree, 1))
        dy = self.sy.derivative()
        a = self.breaks[:-1]
        b = self.breaks[1:]
        half = 0.5 * (b - a)
        tq = (half[:, None] * nodes + (0.5 * (a + b))[:, None]).ravel()
        cq = (half[:, None] * wts).ravel()
        return float(np.sum(cq * self.sx(tq) * dy(tq)))


def spline_boundary_build(xv, yv, order=4, end_condition="periodic"):
    """Interpolating boundary spline through vertices, uniform parameter.

    Order 4 builds cubic pieces with the requested end condition
    (periodic or natural); order 2 builds the polyline.  The curve is
    closed when first and last vertices coincide; a periodic fit appends
    the first vertex when the caller left it off.

    Parameters
    ----------
    xv, yv : array_like
        Vertex coordinates in traversal order.
    order : int
        2 or 4.
    end_condition : str
        "periodic" or "natural" (ignored for order 2).

    Returns
    -------
    SplineBoundary
    """
    xv = np.asarray(xv, dtype=np.float64).ravel().copy()
    yv = np.asarray(yv, dtype=np.float64).ravel().copy()
    if xv.shape != yv.shape:
        raise OrthocubError("vertex coordinate lists differ in length")
    if order not in (2, 4):
        raise OrthocubError(f"spline order must be 2 or 4, got {order}")
    if end_condition not in ("periodic", "natural"):
        raise OrthocubError(f"end condition must be periodic or natural, got {end_condition!r}")
    if end_condition == "periodic" and not (xv[0] == xv[-1] and yv[0] == yv[-1]):
        xv = np.append(xv, xv[0])
        yv = np.append(yv, yv[0])
    closed = bool(xv[0] == xv[-1] and yv[0] == yv[-1])
    if xv.shape[0] < 2 or (closed and xv.shape[0] < 4):
        raise OrthocubError("too few vertices for a boundary spline")
    t = np.arange(xv.shape[0], dtype=np.float64)
    if order == 2:
        sx = _linear_ppoly(t, xv)
        sy = _linear_ppoly(t, yv)
    else:
        sx = CubicSpline(t, xv, bc_type=end_condition)
        sy = CubicSpline(t, yv, bc_type=end_condition)
    return SplineBoundary(sx, sy, xv, yv, order, end_condition, closed)


def _linear_ppoly(t, v):
    return PPoly(np.vstack([np.diff(v), v[:-1]]), t)


@dataclass(frozen=True, eq=False)
class BallUnion:
    """Union of closed balls given by centers and radii."""

    centers: np.ndarray
    radii: np.ndarray

    def __post_init__(self):
        centers = np.atleast_2d(np.asarray(self.centers, dtype=np.float64))
        radii = np.asarray(self.radii, dtype=np.float64).ravel()
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "radii", radii)
        if centers.shape[0] != radii.shape[0]:
            raise OrthocubError("centers and radii counts differ")
        if centers.shape[0] == 0:
            raise OrthocubError("a ball union needs at least one ball")
        if np.any(radii <= 0):
            raise OrthocubError("radii must be positive")

    @property
    def dim(self):
        return self.centers.shape[1]

    def __len__(self):
        return self.radii.shape[0]


def halton(d, count, start_index=1):
    """First count Halton points in [0,1]^d, bases 2, 3, 5.

    Sequence indices run start_index, start_index+1, ...; the default 1
    skips the origin.  Deterministic and permutation-free.
    """
    if count < 1:
        raise OrthocubError(f"count must be at least 1, got {count}")
    return _backend.halton_points(int(count), int(d), int(start_index))


def halton_box(box, count, start_index=1):
    """Halton points mapped affinely into the box."""
    pts = halton(box.dim, count, start_index)
    lo = np.asarray(box.lo)
    hi = np.asarray(box.hi)
    return lo + pts * (hi - lo)


def indomain_balls(points, balls):
    """Boolean mask of the points lying in the closed ball union."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if pts.shape[1] != balls.dim:
        raise OrthocubError(
            f"points have dimension {pts.shape[1]}, balls have {balls.dim}")
    mask = np.zeros(pts.shape[0], dtype=bool)
    for c, r in zip(balls.centers, balls.radii):
        mask |= np.sum((pts - c) ** 2, axis=1) <= r * r
    return mask


def bounding_box(source, inflate=0.0):
    """Smallest axis-aligned box containing the source.

    Accepts a SplineBoundary (exact piecewise-polynomial extrema), a
    BallUnion (center +- radius), or a point array.  inflate > 0 widens
    every half-length by that relative factor.
    """
    if isinstance(source, SplineBoundary):
        lo, hi = _spline_extent(source)
    elif isinstance(source, BallUnion):
        lo = np.min(source.centers - source.radii[:, None], axis=0)
        hi = np.max(source.centers + source.radii[:, None], axis=0)
    else:
        pts = np.atleast_2d(np.asarray(source, dtype=np.float64))
        if pts.size == 0:
            raise OrthocubError("empty point set has no bounding box")
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
    if inflate:
        c = 0.5 * (lo + hi)
        h = 0.5 * (hi - lo) * (1.0 + inflate)
        lo, hi = c - h, c + h
    return BoundingBox(tuple(lo), tuple(hi))


def _spline_extent(boundary):
    lo = np.empty(2)
    hi = np.empty(2)
    for k, poly in enumerate((boundary.sx, boundary.sy)):
        crit = np.asarray(poly.derivative().roots(extrapolate=False), dtype=np.complex128)
        crit = crit.real[np.abs(crit.imag) < 1e-12]
        ts = np.concatenate([poly.x, crit])
        ts = ts[np.isfinite(ts)]
        ts = ts[(ts >= poly.x[0]) & (ts <= poly.x[-1])]
        vals = poly(ts)
        lo[k] = vals.min()
        hi[k] = vals.max()
    return lo, hi


def spline_from_config(config):
    """SplineBoundary from {"vertices", "spline_order", "end_condition"}."""
    verts = np.atleast_2d(np.asarray(config["vertices"], dtype=np.float64))
    if verts.shape[1] != 2:
        raise OrthocubError("spline vertices must be 2D")
    order = int(config.get("spline_order", 4))
    end = str(config.get("end_condition", "periodic"))
    return spline_boundary_build(verts[:, 0], verts[:, 1], order, end)


def balls_from_config(config):
    """BallUnion from {"centers", "radii"}."""
    return BallUnion(np.asarray(config["centers"], dtype=np.float64),
                     np.asarray(config["radii"], dtype=np.float64))
