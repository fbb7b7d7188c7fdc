"""Stability ratios, Lebesgue-constant estimates and the random-trial harness."""

from dataclasses import dataclass

import numpy as np

from .basis import DerivativeOrder, _as_alpha, pochhammer
from .errors import OrthocubError
from .functional import apply_rule, orthocub_weights
from .geometry import bounding_box, halton_box, indomain_balls
from .moments import (DiscreteMeasure, diff_weights_batch, discrete_moments,
                      spline_cheb_moments, gauss_nodes_per_piece)
from .rules import startup

_PROBE_CHUNK = 2048


def stability_ratio(rule):
    """||w||_1 / |sum w|; equals 1 exactly when no weight changes sign."""
    s = float(np.sum(rule.weights))
    if s == 0.0:
        raise OrthocubError("weight sum is zero; stability ratio undefined")
    return float(np.sum(np.abs(rule.weights))) / abs(s)


def lebesgue_constant_estimate(bundle, box, alpha, probes):
    """Max over the probes of ||w(P; alpha)||_1.

    Heuristic stand-in for the true sup over the box; monotone
    nondecreasing in the probe set.  |alpha| = 0 gives the
    hyperinterpolation operator norm estimate.
    """
    order = _as_alpha(alpha, bundle.dim)
    pts = np.atleast_2d(np.asarray(probes, dtype=np.float64))
    if pts.shape[0] == 0 or pts.size == 0:
        raise OrthocubError("probe set is empty")
    best = 0.0
    for lo in range(0, pts.shape[0], _PROBE_CHUNK):
        W = diff_weights_batch(bundle, box, pts[lo:lo + _PROBE_CHUNK], order)
        best = max(best, float(np.max(np.sum(np.abs(W), axis=1))))
    return best


def growth_fit(degrees, values, power):
    """Least-squares fit values ~ sum_{p <= power} c_p n^p.

    Returns
    -------
    coeffs : ndarray
        Coefficients, low degree first.
    residual : float
        Relative 2-norm residual of the fit.
    """
    deg = np.asarray(degrees, dtype=np.float64)
    val = np.asarray(values, dtype=np.float64)
    if deg.size < 3 or deg.size <= power:
        raise OrthocubError("not enough data points for the requested fit")
    coeffs = np.polynomial.polynomial.polyfit(deg, val, int(power))
    resid = val - np.polynomial.polynomial.polyval(deg, coeffs)
    return coeffs, float(np.linalg.norm(resid) / np.linalg.norm(val))


def power_law_exponent(degrees, values):
    """Slope of the log-log least-squares line through (degrees, values)."""
    deg = np.log(np.asarray(degrees, dtype=np.float64))
    val = np.log(np.asarray(values, dtype=np.float64))
    slope, _ = np.polyfit(deg, val, 1)
    return float(slope)


def geometric_mean(errors, clamp=1e-17):
    """Geometric mean with exact zeros clamped to keep the log finite."""
    e = np.maximum(np.asarray(errors, dtype=np.float64), clamp)
    return float(np.exp(np.mean(np.log(e))))


@dataclass(frozen=True)
class TrialResult:
    """Per-trial relative errors of one random-polynomial experiment."""

    kind: str
    degree: int
    errors: np.ndarray
    geometric_mean: float
    alpha: tuple = None


def _power_poly(coeffs, n, pts):
    return (coeffs[0] + pts @ coeffs[1:]) ** n


def _power_poly_derivative(coeffs, n, alpha, pts):
    """Exact alpha partial of (c0 + sum_i c_i x_i)^n at the points."""
    k = int(sum(alpha))
    if n < k:
        return np.zeros(pts.shape[0])
    scale = pochhammer(n - k + 1, k)
    for i, a in enumerate(alpha):
        scale *= coeffs[1 + i] ** a
    return scale * (coeffs[0] + pts @ coeffs[1:]) ** (n - k)


def green_power_integral(boundary, coeffs, n, nodes_per_piece=None):
    """Integral of (c0 + c1 x + c2 y)^n over the spline-bounded region.

    Direct Green-theorem oracle on a power-form primitive, independent
    of the Chebyshev machinery: picks the larger of c1, c2 to divide by
    and integrates the corresponding contour form piecewise.
    """
    c0, c1, c2 = (float(c) for c in coeffs)
    count = nodes_per_piece or 2 * gauss_nodes_per_piece(boundary.piece_degree, n)
    nodes, wts = np.polynomial.legendre.leggauss(count)
    a = boundary.breaks[:-1]
    b = boundary.breaks[1:]
    half = 0.5 * (b - a)
    tq = (half[:, None] * nodes + (0.5 * (a + b))[:, None]).ravel()
    cw = (half[:, None] * wts).ravel()
    base = (c0 + c1 * boundary.sx(tq) + c2 * boundary.sy(tq)) ** (n + 1)
    if abs(c1) >= abs(c2):
        dvals = boundary.sy.derivative()(tq)
        return float(np.sum(cw * base * dvals) / (c1 * (n + 1)))
    dvals = boundary.sx.derivative()(tq)
    return float(-np.sum(cw * base * dvals) / (c2 * (n + 1)))


def random_poly_trial(kind, n, trials=100, seed=0, *, alpha=None, domain=None,
                      rule_kind="near-minimal", halton_count=100000,
                      probe_count=100, oracle="sl"):
    """Relative errors of the synthesized weights on random power polynomials.

    Draws trial coefficients uniformly in (0, 1) from a seeded generator
    (the whole stream up front, so results do not depend on evaluation
    order) and compares against the kind-specific oracle:

    - "integrate-spline": Green-theorem boundary quadrature at doubled
      node count over the demo spline element (2D).
    - "integrate-qmc": the plain QMC sum over the retained Halton points
      in the demo ball union (3D); oracle="sh" swaps in a 100x denser
      reference sum, which measures QMC resolution rather than the
      compression and is reported for context only.
    - "differentiate": the analytic alpha partial of (c0 + sum c_i x_i)^n
      at probe_count Halton points, with per-trial relative 2-norm errors.

    Returns a TrialResult with the per-trial errors and their geometric
    mean (zeros clamped at 1e-17).
    """
    if trials < 1 or n < 0:
        raise OrthocubError("need n >= 0 and at least one trial")
    rng = np.random.default_rng(seed)
    if kind == "integrate-spline":
        boundary = domain if domain is not None else _demo_spline()
        box = bounding_box(boundary)
        bundle = startup(2, n, rule_kind)
        m = spline_cheb_moments(boundary, box, bundle.basis)
        rule = orthocub_weights(bundle, box, m)
        coeffs = rng.random((trials, 3))
        errors = np.empty(trials)
        for t in range(trials):
            approx = apply_rule(rule, _power_poly(coeffs[t], n, rule.nodes))
            exact = green_power_integral(boundary, coeffs[t], n)
            errors[t] = abs(approx - exact) / abs(exact)
        return TrialResult(kind, n, errors, geometric_mean(errors))
    if kind == "integrate-qmc":
        balls = domain if domain is not None else _demo_balls()
        box = bounding_box(balls)
        pts = halton_box(box, halton_count)
        kept = pts[indomain_balls(pts, balls)]
        unit = box.volume / halton_count
        bundle = startup(balls.dim, n, rule_kind)
        m = discrete_moments(DiscreteMeasure(kept, unit), box, bundle.basis, "qmc")
        rule = orthocub_weights(bundle, box, m)
        if oracle == "sh":
            ref_pts = halton_box(box, 100 * halton_count)
            ref_kept = ref_pts[indomain_balls(ref_pts, balls)]
            ref_unit = box.volume / (100 * halton_count)
        elif oracle == "sl":
            ref_kept, ref_unit = kept, unit
        else:
            raise OrthocubError(f"unknown oracle {oracle!r}")
        coeffs = rng.random((trials, 1 + balls.dim))
        errors = np.empty(trials)
        for t in range(trials):
            approx = apply_rule(rule, _power_poly(coeffs[t], n, rule.nodes))
            exact = ref_unit * float(np.sum(_power_poly(coeffs[t], n, ref_kept)))
            errors[t] = abs(approx - exact) / abs(exact)
        return TrialResult(kind, n, errors, geometric_mean(errors))
    if kind == "differentiate":
        if alpha is None:
            raise OrthocubError("differentiate trials need an alpha")
        order = alpha if isinstance(alpha, DerivativeOrder) else DerivativeOrder(tuple(alpha))
        d = len(order.alpha)
        box = domain if domain is not None else _reference_box(d)
        bundle = startup(d, n, rule_kind)
        probes = halton_box(box, probe_count)
        W = diff_weights_batch(bundle, box, probes, order)
        nodes = box.from_reference(bundle.rule.nodes)
        coeffs = rng.random((trials, 1 + d))
        errors = np.empty(trials)
        for t in range(trials):
            approx = W @ _power_poly(coeffs[t], n, nodes)
            exact = _power_poly_derivative(coeffs[t], n, order.alpha, probes)
            scale = float(np.linalg.norm(exact))
            diff = float(np.linalg.norm(approx - exact))
            errors[t] = diff / scale if scale > 0 else diff
        return TrialResult(kind, n, errors, geometric_mean(errors), order.alpha)
    raise OrthocubError(f"unknown trial kind {kind!r}")


def _reference_box(d):
    from .functional import BoundingBox
    return BoundingBox((-1.0,) * d, (1.0,) * d)


def _demo_spline():
    from .demos import demo_spline_element
    return demo_spline_element()


def _demo_balls():
    from .demos import demo_ball_union
    return demo_ball_union()
