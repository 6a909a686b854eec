import math

import numpy as np
import pytest

from gendirichlet import (
    CoefficientSource,
    DirichletPolynomial,
    DirichletSeries,
    Frequency,
    GridSpec,
    KernelSpec,
    TrigPolynomial,
    bohr_coefficient,
    bohr_coefficient_error_bound,
    convolution_identity_residual,
    kernel_eval,
    kernel_ft,
    kernel_ft_quadrature,
    kernel_l1_quadrature,
    riesz_mean,
    sup_norm_line,
    uniform_abscissa_via_riesz,
)
from gendirichlet.summation import riesz_of_polynomial

from conftest import random_polynomial


# ---------------------------------------------------------------------------
# kernel values


def test_poisson_at_zero():
    assert kernel_eval(KernelSpec.poisson(1.0), 0.0) == 1.0 / math.pi


def test_fejer_removable_singularity():
    assert kernel_eval(KernelSpec.fejer(2.0), 0.0) == pytest.approx(1.0 / math.pi, abs=0)
    # stable through the tiny-argument regime
    near = kernel_eval(KernelSpec.fejer(2.0), 1e-12)
    assert near == pytest.approx(2.0 / (2.0 * math.pi), rel=1e-9)


def test_kernel_eval_generic_points():
    s, t = 0.7, 1.3
    assert kernel_eval(KernelSpec.poisson(s), t) == s / (math.pi * (t * t + s * s))
    x = 3.0
    expect = (1.0 / (2 * math.pi * x)) * (math.sin(x * t / 2) / (t / 2)) ** 2
    assert kernel_eval(KernelSpec.fejer(x), t) == pytest.approx(expect, rel=1e-14)


def test_transform_closed_forms():
    fej = KernelSpec.fejer(2.0)
    assert kernel_ft(fej, 0.0) == 1.0
    assert kernel_ft(fej, 1.0) == 0.5
    assert kernel_ft(fej, 3.0) == 0.0
    assert kernel_ft(fej, -3.0) == 0.0
    assert kernel_ft(KernelSpec.poisson(2.0), 1.0) == math.exp(-2.0)


def test_transform_shapes():
    fej, poi = KernelSpec.fejer(2.5), KernelSpec.poisson(1.5)
    for t in (0.3, 0.9, 1.7, 4.0):
        assert kernel_ft(fej, t) == kernel_ft(fej, -t)        # even
        assert kernel_ft(poi, t) == kernel_ft(poi, -t)
        if t < 2.5:
            a, b = 0.2, t
            mid = kernel_ft(fej, (a + b) / 2)                 # piecewise linear
            assert mid == pytest.approx((kernel_ft(fej, a) + kernel_ft(fej, b)) / 2, abs=1e-15)
        assert math.log(kernel_ft(poi, t)) == pytest.approx(-1.5 * t, rel=1e-12)
    assert kernel_ft(fej, 2.5) == 0.0  # triangle hits zero at the edge


def test_l1_norms_equal_one_by_quadrature():
    for x in (0.5, 2.0, 7.0):
        assert kernel_l1_quadrature(KernelSpec.fejer(x)) == pytest.approx(1.0, abs=1e-6)
    for s in (0.3, 1.0, 4.0):
        assert kernel_l1_quadrature(KernelSpec.poisson(s)) == pytest.approx(1.0, abs=1e-6)


def test_transforms_match_quadrature_oracle():
    fej, poi = KernelSpec.fejer(2.0), KernelSpec.poisson(1.5)
    for t in (0.0, 0.4, 1.1, 1.9, 2.6, 5.0):
        assert kernel_ft_quadrature(fej, t) == pytest.approx(kernel_ft(fej, t), abs=1e-4)
        assert kernel_ft_quadrature(poi, t) == pytest.approx(kernel_ft(poi, t), abs=1e-4)


# ---------------------------------------------------------------------------
# Riesz means


def test_riesz_empty_below_first_frequency():
    d = DirichletSeries(Frequency.log_prime(), CoefficientSource.ones())
    assert riesz_mean(d, math.log(2)).terms == ()


def test_riesz_zero_frequency_weight_one():
    poly = DirichletPolynomial(((0.0, 3.0 - 1.0j),))
    for x in (0.1, 1.0, 50.0):
        assert riesz_of_polynomial(poly, x).terms == ((0.0, 3.0 - 1.0j),)


def test_riesz_ordinary_weights():
    zeta = DirichletSeries(Frequency.log_n(), CoefficientSource.ones())
    poly = riesz_mean(zeta, math.log(3))
    assert len(poly) == 2
    (l1, c1), (l2, c2) = poly.terms
    assert (l1, c1) == (0.0, 1.0 + 0j)
    assert c2.real == pytest.approx(1.0 - math.log(2) / math.log(3), abs=0)


def test_riesz_weights_tend_to_one():
    poly = DirichletPolynomial.from_arrays([0.0, 1.0, 2.0, 3.0], [1, 1, 1, 1])
    lam_max = 3.0
    for x in (10.0, 100.0, 1e4):
        rm = riesz_of_polynomial(poly, x)
        deviation = max(abs(c - a) for (_, c), (_, a) in zip(rm.terms, poly.terms))
        assert deviation <= lam_max / x * (1 + 1e-12)
        assert deviation == pytest.approx(lam_max / x, rel=1e-12)


def test_riesz_contraction(rng):
    grid = GridSpec(t_max=60.0, step=0.05)
    for _ in range(10):
        poly = random_polynomial(rng, max_terms=6)
        for sigma in (0.1, 1.0):
            base = sup_norm_line(poly, sigma, grid)
            for x in (1.0, 5.0):
                contracted = sup_norm_line(riesz_of_polynomial(poly, x), sigma, grid)
                assert contracted <= base * (1 + 1e-3)


# ---------------------------------------------------------------------------
# convolution identity


def test_convolution_single_zero_frequency_term_exact():
    poly = DirichletPolynomial(((0.0, 1.0 + 0j),))
    res = convolution_identity_residual(poly, 0.5, 0.5, 2.0, [0.0, 1.0, -3.0])
    assert res == 0.0


def test_convolution_multiplier_route_three_terms():
    poly = DirichletPolynomial(((0.0, 1 + 0j), (0.7, 0.5 - 0.2j), (2.3, -1.1 + 0.4j)))
    res = convolution_identity_residual(poly, 0.5, 0.5, 2.0, [0.0, 0.5, -1.3, 7.7])
    assert res < 1e-12


def test_convolution_quadrature_oracle_three_terms():
    poly = DirichletPolynomial(((0.0, 1 + 0j), (0.7, 0.5 - 0.2j), (2.3, -1.1 + 0.4j)))
    res = convolution_identity_residual(
        poly, 0.5, 0.5, 2.0, [0.0, 0.5, -1.3, 7.7], mode="quadrature", window=1e4)
    assert res < 1e-4


def test_convolution_parameter_validation():
    poly = DirichletPolynomial(((0.0, 1 + 0j),))
    with pytest.raises(ValueError):
        convolution_identity_residual(poly, 0.0, 0.5, 2.0, [0.0])
    with pytest.raises(ValueError):
        convolution_identity_residual(poly, 0.5, 0.5, 2.0, [0.0], mode="bogus")


# ---------------------------------------------------------------------------
# uniform abscissa via Riesz means


def test_riesz_scan_agrees_with_direct_evaluation_oracle():
    # positive coefficients put the line sup at t = 0, which the direct
    # evaluation of the mean reproduces independently of the grid scanner
    zeta = DirichletSeries(Frequency.log_n(5000), CoefficientSource.ones())
    grid = GridSpec(t_max=5.0, step=0.05)
    for x in (2.0, 4.0, 7.0):
        scanned = sup_norm_line(riesz_mean(zeta, x), 0.0, grid)
        direct = abs(riesz_mean(zeta, x).evaluate(0.0))
        assert scanned == pytest.approx(direct, rel=1e-12)


def test_riesz_abscissa_zeta_grows_toward_one():
    zeta = DirichletSeries(Frequency.log_n(5000), CoefficientSource.ones())
    grid = GridSpec(t_max=5.0, step=0.1)
    small = uniform_abscissa_via_riesz(zeta, x_points=np.linspace(2.0, 5.0, 8), grid=grid)
    large = uniform_abscissa_via_riesz(zeta, x_points=np.linspace(5.0, 8.3, 8), grid=grid)
    assert 0.55 <= small.value <= 1.02
    assert small.value < large.value <= 1.02
    assert not large.clamped


def test_riesz_abscissa_polynomial_clamps():
    poly = DirichletSeries(
        Frequency.explicit([0.0, 0.8, 1.9]), CoefficientSource.explicit([1.0, 2.0, -0.5]))
    est = uniform_abscissa_via_riesz(poly, grid=GridSpec(t_max=5.0, step=0.05))
    assert est.clamped
    assert est.value <= 0.2


def test_riesz_abscissa_alternating_clamps_small_grid():
    eta = DirichletSeries(Frequency.log_n(3000), CoefficientSource.alternating())
    est = uniform_abscissa_via_riesz(
        eta, x_points=np.linspace(2.0, 8.0, 10), grid=GridSpec(t_max=2.0, step=0.05))
    assert est.clamped
    assert est.value <= 0.05


# ---------------------------------------------------------------------------
# Bohr coefficients


def test_bohr_coefficient_single_term_exact_any_T():
    f = TrigPolynomial.from_pairs([(1.3, 0.7 - 0.4j)])
    for T in (1.0, 10.0, 1e4):
        assert bohr_coefficient(f, 0.5, 1.3, T) == 0.7 - 0.4j


def test_bohr_coefficient_off_frequency_within_bound():
    f = TrigPolynomial.from_pairs([(0.0, 0.1), (0.4, -0.12j), (0.9, 0.08)])
    for x in (0.2, 0.6, 1.5):
        got = abs(bohr_coefficient(f, 0.5, x, 1e4))
        assert got <= bohr_coefficient_error_bound(f, 0.5, x, 1e4) * (1 + 1e-12)


def test_bohr_coefficient_recovery():
    f = TrigPolynomial.from_pairs([(0.0, 0.1 + 0.05j), (0.4, -0.12j), (0.9, 0.08)])
    for x, c in f.terms:
        got = bohr_coefficient(f, 0.5, x, 1e4)
        assert abs(got - c) < 1e-3


def test_bohr_coefficient_matches_quadrature_time_average():
    # independent oracle: numerically integrate the time average at finite T
    f = TrigPolynomial.from_pairs([(0.3, 0.4 + 0.2j), (1.1, -0.25)])
    sigma, x, T = 0.7, 0.3, 50.0
    closed = bohr_coefficient(f, sigma, x, T)
    ts = np.linspace(-T, T, 200_001)
    vals = np.zeros(len(ts), dtype=complex)
    for xn, c in f.terms:
        vals += c * np.exp(-xn * sigma) * np.exp(-1j * xn * ts)
    vals *= np.exp((sigma + 1j * ts) * x)
    oracle = np.trapezoid(vals, ts) / (2 * T)
    assert closed == pytest.approx(complex(oracle), abs=1e-8)


def test_bohr_coefficient_sigma_independence():
    f = TrigPolynomial.from_pairs([(0.0, 0.1), (0.4, -0.1j), (0.9, 0.05)])
    for x, _ in f.terms:
        d = abs(bohr_coefficient(f, 0.5, x, 1e4) - bohr_coefficient(f, 2.0, x, 1e4))
        assert d < 1e-3


def test_trig_polynomial_rejects_duplicate_frequencies():
    with pytest.raises(ValueError):
        TrigPolynomial.from_pairs([(1.0, 1.0), (1.0, 2.0)])
