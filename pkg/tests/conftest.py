"""Shared test helpers: the registered frequency battery and random-object
builders with fixed seeds."""

from __future__ import annotations

import numpy as np
import pytest

from gendirichlet import (
    CoefficientSource,
    DirichletPolynomial,
    DirichletSeries,
    Frequency,
)

# the seven registered symbolic families exercised throughout
REGISTERED_FREQUENCIES = {
    "log_n": Frequency.log_n(),
    "n": Frequency.naturals(),
    "log_n_pow_half": Frequency.log_n_pow(0.5),
    "log_n_pow_2": Frequency.log_n_pow(2.0),
    "log_prime": Frequency.log_prime(),
    "scaled_log_n_2": Frequency.scaled_log_n(2),
    "log_log_n": Frequency.log_log_n(),
}

# exact strip widths of the battery families
EXACT_L = {
    "log_n": 1.0,
    "n": 0.0,
    "log_n_pow_half": np.inf,
    "log_n_pow_2": 0.0,
    "log_prime": 1.0,
    "scaled_log_n_2": 0.5,
    "log_log_n": np.inf,
}


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_polynomial(rng, max_terms: int = 8, freq_max: float = 5.0,
                      min_gap: float = 0.05, coeff_scale: float = 1.0,
                      include_zero: bool = False) -> DirichletPolynomial:
    """Random Dirichlet polynomial with distinct nonnegative frequencies."""
    count = int(rng.integers(2, max_terms + 1))
    lam = np.sort(rng.uniform(0.0, freq_max, size=count))
    while np.any(np.diff(lam) < min_gap):
        lam = np.sort(rng.uniform(0.0, freq_max, size=count))
    if include_zero:
        lam[0] = 0.0
    coeffs = coeff_scale * (rng.uniform(-1, 1, size=count)
                            + 1j * rng.uniform(-1, 1, size=count))
    return DirichletPolynomial.from_arrays(lam, coeffs)


def random_series(rng, n_max: int = 20_000) -> DirichletSeries:
    """Random infinite series from the registered generators and families."""
    freq_pick = rng.integers(0, 3)
    if freq_pick == 0:
        freq = Frequency.log_n(n_max)
    elif freq_pick == 1:
        freq = Frequency.scaled_log_n(2, n_max)
    else:
        freq = Frequency.log_n_pow(float(rng.uniform(1.0, 1.6)), n_max)
    coeff_pick = rng.integers(0, 3)
    if coeff_pick == 0:
        coeffs = CoefficientSource.ones()
    elif coeff_pick == 1:
        coeffs = CoefficientSource.alternating()
    else:
        coeffs = CoefficientSource.power(float(rng.uniform(0.1, 0.9)))
    return DirichletSeries(freq=freq, coeffs=coeffs)


def dense_grid_sup(poly: DirichletPolynomial, sigma: float, t_max: float,
                   step: float) -> float:
    """Independent brute-force sup oracle: plain dense-grid maximum."""
    t = np.arange(-t_max, t_max + step / 2, step)
    vals = np.zeros(len(t), dtype=complex)
    for l, c in poly.terms:
        vals += c * np.exp(-l * sigma) * np.exp(-1j * l * t)
    return float(np.max(np.abs(vals)))
