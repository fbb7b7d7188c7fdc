"""Reference cubature rules on [-1,1]^d for the product Chebyshev measure.

The near-minimal family keeps alternating nodes of the (n+1)-subdivision
Chebyshev-Lobatto grid, selected by coordinate parity, with the dropped
mass folded into the kept weights.  The tensorial family is the plain
Gauss-Chebyshev product.  Both integrate every polynomial of total
degree <= 2n against w(t) = prod_k (1 - t_k^2)^(-1/2).
"""

from dataclasses import dataclass

import numpy as np

from .basis import grlex_indices, vandermonde_chebyshev
from .errors import OrthocubError

MEASURE_TAG = "chebyshev-product-1st-kind"
NEAR_MINIMAL = "near-minimal"
TENSORIAL = "tensorial"


@dataclass(frozen=True, eq=False)
class ReferenceRule:
    """Positive rule with algebraic exactness degree ade on [-1,1]^dim."""

    dim: int
    ade: int
    nodes: np.ndarray
    weights: np.ndarray
    rule_kind: str
    measure_tag: str = MEASURE_TAG

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.atleast_2d(np.asarray(self.nodes, dtype=np.float64)))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=np.float64).ravel())
        if self.nodes.shape[0] != self.weights.shape[0]:
            raise OrthocubError("node and weight counts differ")

    def __len__(self):
        return self.weights.shape[0]


@dataclass(frozen=True, eq=False)
class StartupBundle:
    """Functional-independent precomputation shared by all weight syntheses."""

    rule: ReferenceRule
    basis: object
    vandermonde: np.ndarray
    weighted_vandermonde: np.ndarray

    @property
    def dim(self):
        return self.rule.dim

    @property
    def degree(self):
        return self.basis.degree

    def __len__(self):
        return len(self.rule)


def _lobatto_1d(m):
    # Chebyshev-Lobatto points cos(k pi / m) carry Chebyshev-measure
    # weights pi/m inside and pi/(2m) at the two ends
    k = np.arange(m + 1)
    nodes = np.cos(k * np.pi / m)
    w = np.full(m + 1, np.pi / m)
    w[0] = w[-1] = np.pi / (2.0 * m)
    return nodes, w


def mpx_square(n):
    """Near-minimal ADE=2n rule on the square.

    Keeps the odd-parity half of the (n+2)^2 Lobatto grid with doubled
    weights; cardinality (n+2)^2/2 for even n, (n+1)(n+3)/2 for odd n.
    """
    if n < 0:
        raise OrthocubError(f"degree must be nonnegative, got {n}")
    m = n + 1
    t, w = _lobatto_1d(m)
    nodes = []
    weights = []
    for i in range(m + 1):
        for j in range(m + 1):
            if (i + j) % 2 == 1:
                nodes.append((t[i], t[j]))
                weights.append(2.0 * w[i] * w[j])
    return ReferenceRule(2, 2 * n, np.array(nodes), np.array(weights), NEAR_MINIMAL)


def mpx_cube(n):
    """Near-minimal ADE=2n rule on the cube.

    Keeps Lobatto grid nodes whose three indices share one parity, with
    weights scaled by 4; cardinality (n+2)^3/4 for even n.  The index
    condition is symmetric under coordinate permutation, so the rule (and
    everything synthesized from it) inherits the cube's axis symmetry.
    """
    if n < 0:
        raise OrthocubError(f"degree must be nonnegative, got {n}")
    m = n + 1
    t, w = _lobatto_1d(m)
    nodes = []
    weights = []
    for i in range(m + 1):
        for j in range(m + 1):
            for k in range(m + 1):
                if i % 2 == j % 2 == k % 2:
                    nodes.append((t[i], t[j], t[k]))
                    weights.append(4.0 * w[i] * w[j] * w[k])
    return ReferenceRule(3, 2 * n, np.array(nodes), np.array(weights), NEAR_MINIMAL)


def gauss_chebyshev_1d(n):
    """(n+1)-point Gauss-Chebyshev nodes and weights on [-1,1]."""
    if n < 0:
        raise OrthocubError(f"degree must be nonnegative, got {n}")
    i = np.arange(1, n + 2)
    nodes = np.cos((2 * i - 1) * np.pi / (2.0 * (n + 1)))
    return nodes, np.full(n + 1, np.pi / (n + 1))


def tensor_gauss_chebyshev(d, n):
    """Tensor Gauss-Chebyshev rule with (n+1)^d nodes and ADE >= 2n."""
    if d not in (2, 3):
        raise OrthocubError(f"dimension must be 2 or 3, got {d}")
    t, w = gauss_chebyshev_1d(n)
    grids = np.meshgrid(*([t] * d), indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=1)
    wgrids = np.meshgrid(*([w] * d), indexing="ij")
    weights = np.ones(nodes.shape[0])
    for g in wgrids:
        weights = weights * g.ravel()
    return ReferenceRule(d, 2 * n, nodes, weights, TENSORIAL)


def _canonical_kind(rule_kind):
    k = str(rule_kind).lower()
    if k in (NEAR_MINIMAL, "mpx"):
        return NEAR_MINIMAL
    if k in (TENSORIAL, "tensor"):
        return TENSORIAL
    raise OrthocubError(f"unknown rule kind {rule_kind!r}")


def startup(d, n, rule_kind=NEAR_MINIMAL):
    """Reference rule, graded basis and (weighted) Vandermonde in one bundle.

    The bundle is independent of any functional and is meant to be built
    once per (d, n) and reused; every later weight synthesis is a single
    matrix-vector product against weighted_vandermonde.
    """
    kind = _canonical_kind(rule_kind)
    if kind == NEAR_MINIMAL:
        if d == 2:
            rule = mpx_square(n)
        elif d == 3:
            rule = mpx_cube(n)
        else:
            raise OrthocubError(f"dimension must be 2 or 3, got {d}")
    else:
        rule = tensor_gauss_chebyshev(d, n)
    return bundle_from_rule(rule)


def bundle_from_rule(rule):
    """Assemble the startup bundle around an existing reference rule."""
    basis = grlex_indices(rule.dim, rule.ade // 2)
    V = vandermonde_chebyshev(rule.nodes, basis)
    W = rule.weights[:, None] * V
    return StartupBundle(rule, basis, V, W)


def rule_to_dict(rule):
    """JSON-ready mapping with full double precision."""
    return {
        "dim": rule.dim,
        "ade": rule.ade,
        "rule_kind": rule.rule_kind,
        "nodes": rule.nodes.tolist(),
        "weights": rule.weights.tolist(),
    }


def rule_from_dict(data):
    return ReferenceRule(
        int(data["dim"]),
        int(data["ade"]),
        np.asarray(data["nodes"], dtype=np.float64),
        np.asarray(data["weights"], dtype=np.float64),
        str(data.get("rule_kind", NEAR_MINIMAL)),
    )
