"""Cubature-node representation of linear functionals on polynomial spaces.

Any linear functional with computable moments on the total-degree space
(integration over curved 2D elements, compression of large QMC sums,
pointwise derivatives up to order two) becomes a weighted sum over a
fixed near-minimal node set in a bounding box, at the cost of a single
matrix-vector product per functional.
"""

from ._backend import BACKEND
from .basis import (DerivativeOrder, IndexBasis, chebyshev_orthonormal,
                    chebyshev_primitive, diff_moments_ref, gamma_ratio_half,
                    grlex_indices, jacobi_eval, pochhammer,
                    vandermonde_chebyshev)
from .demos import demo_ball_union, demo_spline_element
from .diagnostics import (TrialResult, geometric_mean, growth_fit,
                          lebesgue_constant_estimate, power_law_exponent,
                          random_poly_trial, stability_ratio)
from .errors import ExtrapolationWarning, OrientationWarning, OrthocubError
from .functional import (BoundingBox, CubatureRule, MomentVector, apply_rule,
                         hyperinterp_weights, map_rule, orthocub_weights,
                         weight_bound)
from .geometry import (BallUnion, SplineBoundary, bounding_box, halton,
                       indomain_balls, spline_boundary_build)
from .moments import (DiscreteMeasure, diff_weights, diff_weights_batch,
                      differentiation_matrix, discrete_moments,
                      spline_cheb_moments)
from .rules import (ReferenceRule, StartupBundle, mpx_cube, mpx_square,
                    startup, tensor_gauss_chebyshev)

__all__ = [
    "BACKEND",
    "BallUnion",
    "BoundingBox",
    "CubatureRule",
    "DerivativeOrder",
    "DiscreteMeasure",
    "ExtrapolationWarning",
    "IndexBasis",
    "MomentVector",
    "OrientationWarning",
    "OrthocubError",
    "ReferenceRule",
    "SplineBoundary",
    "StartupBundle",
    "TrialResult",
    "apply_rule",
    "bounding_box",
    "chebyshev_orthonormal",
    "chebyshev_primitive",
    "demo_ball_union",
    "demo_spline_element",
    "diff_moments_ref",
    "diff_weights",
    "diff_weights_batch",
    "differentiation_matrix",
    "discrete_moments",
    "gamma_ratio_half",
    "geometric_mean",
    "grlex_indices",
    "growth_fit",
    "halton",
    "hyperinterp_weights",
    "indomain_balls",
    "jacobi_eval",
    "lebesgue_constant_estimate",
    "map_rule",
    "mpx_cube",
    "mpx_square",
    "orthocub_weights",
    "pochhammer",
    "power_law_exponent",
    "random_poly_trial",
    "spline_boundary_build",
    "spline_cheb_moments",
    "stability_ratio",
    "startup",
    "tensor_gauss_chebyshev",
    "vandermonde_chebyshev",
    "weight_bound",
]

__version__ = "0.1.0"
