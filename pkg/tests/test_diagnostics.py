"""Diagnostics: stability, Lebesgue estimates, fits, random trials."""

import types

import numpy as np
import pytest
import sympy as sp

from orthocub import (BoundingBox, OrthocubError, lebesgue_constant_estimate,
                      random_poly_trial, spline_boundary_build, stability_ratio,
                      startup)
from orthocub.diagnostics import (_power_poly_derivative, geometric_mean,
                                  green_power_integral, growth_fit,
                                  power_law_exponent)
from orthocub.geometry import halton_box

REF2 = BoundingBox((-1.0, -1.0), (1.0, 1.0))


def _fake_rule(weights):
    return types.SimpleNamespace(weights=np.asarray(weights, dtype=np.float64))


def test_stability_ratio_values():
    assert stability_ratio(_fake_rule([0.5, 1.5, 2.0])) == 1.0
    assert stability_ratio(_fake_rule([1.0, -1.0, 2.0])) == 2.0
    with pytest.raises(OrthocubError):
        stability_ratio(_fake_rule([1.0, -1.0]))


def test_lebesgue_degree_zero_is_one():
    bundle = startup(2, 0)
    probes = halton_box(REF2, 50)
    # single constant basis function: sum_i |z_i psi_0^2| = pi * (1/pi)
    assert lebesgue_constant_estimate(bundle, REF2, (0, 0), probes) == pytest.approx(1.0, abs=1e-14)


def test_lebesgue_translation_invariance_and_scaling():
    n = 6
    bundle = startup(2, n)
    ref_probes = halton_box(REF2, 200)
    ref = lebesgue_constant_estimate(bundle, REF2, (1, 0), ref_probes)

    shifted = BoundingBox((0.0, 0.0), (2.0, 2.0))
    sh = lebesgue_constant_estimate(bundle, shifted, (1, 0),
                                    shifted.from_reference(ref_probes))
    assert sh == pytest.approx(ref, rel=1e-12)

    # half-size box doubles every first-partial weight
    small = BoundingBox((0.0, 0.0), (1.0, 1.0))
    sm = lebesgue_constant_estimate(bundle, small, (1, 0),
                                    small.from_reference(ref_probes))
    assert sm == pytest.approx(2.0 * ref, rel=1e-12)


def test_lebesgue_monotone_in_probe_set():
    bundle = startup(2, 7)
    probes = halton_box(REF2, 300)
    small = lebesgue_constant_estimate(bundle, REF2, (0, 1), probes[:60])
    large = lebesgue_constant_estimate(bundle, REF2, (0, 1), probes)
    assert large >= small
    with pytest.raises(OrthocubError):
        lebesgue_constant_estimate(bundle, REF2, (0, 1), np.empty((0, 2)))


@pytest.mark.parametrize("d", [2, 3])
def test_lebesgue_axis_symmetry(d):
    # the node set and the box are coordinate-permutation symmetric, so
    # estimates over a permutation-closed probe set must coincide
    bundle = startup(d, 8)
    box = BoundingBox((-1.0,) * d, (1.0,) * d)
    base = halton_box(box, 200)
    from itertools import permutations
    closed = np.vstack([base[:, p] for p in permutations(range(d))])

    def spread(alphas):
        vals = [lebesgue_constant_estimate(bundle, box, a, closed) for a in alphas]
        return (max(vals) - min(vals)) / max(vals)

    firsts = [tuple(1 if i == k else 0 for i in range(d)) for k in range(d)]
    seconds = [tuple(2 if i == k else 0 for i in range(d)) for k in range(d)]
    assert spread(firsts) <= 1e-10
    assert spread(seconds) <= 1e-10


def test_growth_fit_recovers_exact_quadratic():
    deg = np.arange(2, 18, 2)
    coeffs, resid = growth_fit(deg, 3.0 * deg ** 2, 2)
    assert resid <= 1e-12
    assert coeffs[2] == pytest.approx(3.0, abs=1e-10)
    with pytest.raises(OrthocubError):
        growth_fit([2, 4], [1.0, 2.0], 2)
    with pytest.raises(OrthocubError):
        growth_fit([2, 4, 6], [1.0, 2.0, 3.0], 4)


def test_power_law_exponent_exact():
    deg = np.arange(2, 18, 2)
    assert power_law_exponent(deg, 5.0 * deg ** 3) == pytest.approx(3.0, abs=1e-12)


def test_geometric_mean_clamps_zeros():
    assert geometric_mean([2.0, 8.0]) == pytest.approx(4.0)
    assert geometric_mean([0.0, 0.0]) == pytest.approx(1e-17)


def test_power_poly_derivative_against_sympy():
    n = 7
    cases = [((1, 0), 2), ((2, 0), 2), ((1, 1), 2), ((1, 0, 1), 3)]
    rng = np.random.default_rng(5)
    for alpha, d in cases:
        coeffs = rng.random(1 + d)
        pts = rng.uniform(-1, 1, (7, d))
        xs = sp.symbols(f"x0:{d}")
        expr = (coeffs[0] + sum(c * x for c, x in zip(coeffs[1:], xs))) ** n
        for x, a in zip(xs, alpha):
            expr = sp.diff(expr, x, a)
        f = sp.lambdify(xs, expr, "numpy")
        want = f(*pts.T)
        got = _power_poly_derivative(coeffs, n, alpha, pts)
        assert np.max(np.abs(got - want)) <= 1e-12 * max(1.0, np.max(np.abs(want)))
    # order above the degree annihilates
    assert np.array_equal(_power_poly_derivative(np.ones(3), 1, (2, 0), pts[:, :2]),
                          np.zeros(7))


def test_green_power_integral_against_symbolic_square():
    square = spline_boundary_build([-1.0, 1.0, 1.0, -1.0, -1.0],
                                   [-1.0, -1.0, 1.0, 1.0, -1.0], order=2)
    x, y = sp.symbols("x y")
    for coeffs, n in [((0.3, 1.2, -0.7), 3), ((1.1, 0.2, 0.9), 6)]:
        want = float(sp.integrate((coeffs[0] + coeffs[1] * x + coeffs[2] * y) ** n,
                                  (x, -1, 1), (y, -1, 1)))
        got = green_power_integral(square, coeffs, n)
        assert got == pytest.approx(want, rel=1e-13)


def test_differentiate_trial_linear_is_exact():
    res = random_poly_trial("differentiate", 1, trials=10, seed=3, alpha=(1, 0))
    assert res.kind == "differentiate"
    assert res.alpha == (1, 0)
    assert np.max(res.errors) <= 1e-13


def test_trials_are_bit_reproducible():
    a = random_poly_trial("differentiate", 5, trials=8, seed=11, alpha=(0, 2))
    b = random_poly_trial("differentiate", 5, trials=8, seed=11, alpha=(0, 2))
    assert np.array_equal(a.errors, b.errors)
    c = random_poly_trial("differentiate", 5, trials=8, seed=12, alpha=(0, 2))
    assert not np.array_equal(a.errors, c.errors)


def test_spline_trial_small_errors():
    res = random_poly_trial("integrate-spline", 10, trials=20, seed=0)
    assert res.degree == 10
    assert res.errors.shape == (20,)
    assert res.geometric_mean <= 1e-12


def test_qmc_trial_reproduces_plain_sum():
    res = random_poly_trial("integrate-qmc", 2, trials=10, seed=1,
                            halton_count=20000)
    assert res.geometric_mean <= 1e-12


def test_qmc_trial_dense_reference_shows_sampling_error():
    # against a 100x denser sum the residual is the QMC discrepancy of
    # the base point set, orders above the compression error
    res = random_poly_trial("integrate-qmc", 2, trials=5, seed=1,
                            halton_count=2000, oracle="sh")
    assert 1e-9 <= res.geometric_mean <= 1e-1


def test_trial_validation():
    with pytest.raises(OrthocubError):
        random_poly_trial("integrate-mesh", 4)
    with pytest.raises(OrthocubError):
        random_poly_trial("differentiate", 4)
    with pytest.raises(OrthocubError):
        random_poly_trial("integrate-spline", 4, trials=0)
    with pytest.raises(OrthocubError):
        random_poly_trial("integrate-qmc", 2, trials=2, halton_count=5000,
                          oracle="sx")
