"""Weight synthesis: one matrix-vector product per functional.

Given a startup bundle (reference rule of exactness 2n plus weighted
Vandermonde) and the moments of a linear functional in the mapped basis,
the representing weights are w = diag(z) V m.  Nothing is solved or
factorized; exactness on total degree <= n follows from the discrete
orthogonality of the basis under the rule.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .basis import grlex_indices, vandermonde_chebyshev
from .errors import ExtrapolationWarning, OrthocubError


@dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box prod_k [lo_k, hi_k] with positive side lengths."""

    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo = tuple(float(a) for a in np.atleast_1d(self.lo))
        hi = tuple(float(b) for b in np.atleast_1d(self.hi))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != len(hi):
            raise OrthocubError("lo and hi must have equal length")
        if len(lo) not in (2, 3):
            raise OrthocubError(f"box dimension must be 2 or 3, got {len(lo)}")
        if any(b <= a for a, b in zip(lo, hi)):
            raise OrthocubError("box sides must have positive length")

    @property
    def dim(self):
        return len(self.lo)

    @property
    def half_lengths(self):
        """Scaling factors lambda_k = (hi_k - lo_k) / 2."""
        return (np.asarray(self.hi) - np.asarray(self.lo)) / 2.0

    @property
    def center(self):
        return (np.asarray(self.hi) + np.asarray(self.lo)) / 2.0

    @property
    def volume(self):
        return float(np.prod(np.asarray(self.hi) - np.asarray(self.lo)))

    def to_reference(self, points):
        """Map points in the box onto [-1,1]^d coordinates."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        return (pts - self.center) / self.half_lengths

    def from_reference(self, Q):
        """Inverse of to_reference."""
        Q = np.atleast_2d(np.asarray(Q, dtype=np.float64))
        return Q * self.half_lengths + self.center

    def approx_equal(self, other, tol=1e-12):
        if self.dim != other.dim:
            return False
        a = np.array([self.lo, self.hi])
        b = np.array([other.lo, other.hi])
        return bool(np.all(np.abs(a - b) <= tol * np.maximum(1.0, np.abs(a))))


@dataclass(frozen=True, eq=False)
class MomentVector:
    """Moments m_j = L(psi_j(Lambda^{-1}(. - C))) of a linear functional.

    The stored values are moments of the unscaled mapped basis, exactly
    what the synthesis consumes; no determinant factor is attached.
    """

    values: np.ndarray
    basis: object
    box: BoundingBox
    functional_tag: str = ""

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64).ravel()
        object.__setattr__(self, "values", vals)
        if vals.shape[0] != self.basis.size:
            raise OrthocubError(
                f"moment vector has length {vals.shape[0]}, basis needs {self.basis.size}")
        if self.basis.dim != self.box.dim:
            raise OrthocubError("basis and box dimensions differ")

    def __len__(self):
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class CubatureRule:
    """Weighted nodes representing one functional exactly on degree <= ade."""

    nodes: np.ndarray
    weights: np.ndarray
    ade: int
    box: BoundingBox
    functional_tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.atleast_2d(np.asarray(self.nodes, dtype=np.float64)))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=np.float64).ravel())
        if self.nodes.shape[0] != self.weights.shape[0]:
            raise OrthocubError("node and weight counts differ")

    def __len__(self):
        return self.weights.shape[0]


def map_rule(bundle, box):
    """Affine image of the bundle's reference rule on the box.

    Returns the mapped nodes and the positive weights u = det(Lambda) z,
    which integrate the mapped Chebyshev measure of total mass
    pi^d det(Lambda).
    """
    if bundle.dim != box.dim:
        raise OrthocubError(
            f"bundle dimension {bundle.dim} does not match box dimension {box.dim}")
    nodes = box.from_reference(bundle.rule.nodes)
    u = float(np.prod(box.half_lengths)) * bundle.rule.weights
    return nodes, u


def orthocub_weights(bundle, box, m):
    """Weights representing the functional behind m at the mapped nodes.

    One matrix-vector product with the bundle's weighted Vandermonde.
    The returned rule satisfies sum_i w_i f(P_i) = L(f) for every f of
    total degree <= n.
    """
    if m.basis is not bundle.basis and m.basis != bundle.basis:
        raise OrthocubError("moment vector was built for a different basis")
    if not m.box.approx_equal(box):
        raise OrthocubError("moment vector was built for a different box")
    nodes, _ = map_rule(bundle, box)
    w = bundle.weighted_vandermonde @ m.values
    return CubatureRule(nodes, w, bundle.basis.degree, box, m.functional_tag)


def apply_rule(rule, samples):
    """Weighted sum sum_i w_i f(P_i) for samples listed in node order."""
    samples = np.asarray(samples, dtype=np.float64).ravel()
    if samples.shape != rule.weights.shape:
        raise OrthocubError(
            f"got {samples.shape[0]} samples for {rule.weights.shape[0]} nodes")
    return float(rule.weights @ samples)


def hyperinterp_weights(bundle, box, P):
    """Evaluation weights of the degree-n discrete orthogonal projection.

    sum_i w_i(P) f(P_i) is the hyperinterpolant of f at P and equals
    f(P) whenever f has total degree <= n.  On a box the determinant
    factors cancel, leaving diag(z) V psi(Lambda^{-1}(P - C)).  Points
    outside the box are allowed but flagged as extrapolation.
    """
    if bundle.dim != box.dim:
        raise OrthocubError(
            f"bundle dimension {bundle.dim} does not match box dimension {box.dim}")
    Q = box.to_reference(np.asarray(P, dtype=np.float64).reshape(1, -1))
    warn_extrapolation(Q)
    row = vandermonde_chebyshev(Q, bundle.basis)[0]
    return bundle.weighted_vandermonde @ row


def warn_extrapolation(Q, tol=1e-12):
    """Warn when reference coordinates leave the closed cube."""
    if np.any(np.abs(Q) > 1.0 + tol):
        warnings.warn("evaluation point lies outside the bounding box",
                      ExtrapolationWarning, stacklevel=3)


def weight_bound(m):
    """Right side of the a-priori weight bound sqrt(mu(B)) ||m_phi||_2.

    For the product Chebyshev measure mu(B) = pi^d det(Lambda), and the
    scaled-basis moments are m_phi = m / sqrt(det Lambda), so the bound
    collapses to pi^{d/2} ||m||_2: the determinant cancels.
    """
    return math.pi ** (m.box.dim / 2.0) * float(np.linalg.norm(m.values))


def moment_to_dict(m):
    """JSON-ready mapping carrying the basis descriptor and box."""
    return {
        "dim": m.basis.dim,
        "degree": m.basis.degree,
        "values": m.values.tolist(),
        "box": {"lo": list(m.box.lo), "hi": list(m.box.hi)},
        "functional_tag": m.functional_tag,
    }


def moment_from_dict(data):
    basis = grlex_indices(int(data["dim"]), int(data["degree"]))
    box = BoundingBox(tuple(data["box"]["lo"]), tuple(data["box"]["hi"]))
    return MomentVector(np.asarray(data["values"], dtype=np.float64), basis, box,
                        str(data.get("functional_tag", "")))


def cubature_to_dict(rule):
    return {
        "dim": rule.box.dim,
        "ade": rule.ade,
        "nodes": rule.nodes.tolist(),
        "weights": rule.weights.tolist(),
        "box": {"lo": list(rule.box.lo), "hi": list(rule.box.hi)},
        "functional_tag": rule.functional_tag,
    }


def cubature_from_dict(data):
    box = BoundingBox(tuple(data["box"]["lo"]), tuple(data["box"]["hi"]))
    return CubatureRule(
        np.asarray(data["nodes"], dtype=np.float64),
        np.asarray(data["weights"], dtype=np.float64),
        int(data["ade"]),
        box,
        str(data.get("functional_tag", "")),
    )
