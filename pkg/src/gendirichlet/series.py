"""General Dirichlet series: coefficient sources, translation, partial sums,
basis-restricted sections, and sup norms on vertical lines.

Everything here is immutable and pure; series carry their accumulated
translation as a single shift so that repeated translations compose exactly
coefficientwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .frequency import (
    BohrDecomposition,
    Frequency,
    FrequencyError,
    materialize,
)

__all__ = [
    "CoefficientSource",
    "DirichletSeries",
    "DirichletPolynomial",
    "GridSpec",
    "MismatchedDecomposition",
    "translate",
    "partial_sum",
    "abschnitt",
    "sup_norm_line",
    "truncate_below",
    "prefix",
    "count_below",
]


class MismatchedDecomposition(ValueError):
    """The decomposition does not belong to the series' frequency."""


# ---------------------------------------------------------------------------
# coefficient sources


@dataclass(frozen=True)
class CoefficientSource:
    """Referentially transparent coefficient generator a_n.

    Kinds: ``explicit`` (finite list, later coefficients zero — a Dirichlet
    polynomial), ``ones`` (a_n = 1), ``alternating`` (a_n = (-1)^n), ``power``
    (a_n = n^(-beta)).
    """

    kind: str
    values: tuple = ()
    beta: float = 0.0

    def __post_init__(self):
        if self.kind not in ("explicit", "ones", "alternating", "power"):
            raise ValueError(f"unknown coefficient kind '{self.kind}'")

    @staticmethod
    def explicit(values) -> "CoefficientSource":
        return CoefficientSource("explicit", values=tuple(complex(v) for v in values))

    @staticmethod
    def ones() -> "CoefficientSource":
        return CoefficientSource("ones")

    @staticmethod
    def alternating() -> "CoefficientSource":
        return CoefficientSource("alternating")

    @staticmethod
    def power(beta: float) -> "CoefficientSource":
        return CoefficientSource("power", beta=float(beta))

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "explicit"

    def array(self, n: int) -> np.ndarray:
        """First n coefficients as a complex array."""
        if self.kind == "explicit":
            out = np.zeros(n, dtype=complex)
            take = min(n, len(self.values))
            out[:take] = self.values[:take]
            return out
        if self.kind == "ones":
            return np.ones(n, dtype=complex)
        if self.kind == "alternating":
            out = np.ones(n, dtype=complex)
            out[::2] = -1.0  # a_1 = (-1)^1
            return out
        ns = np.arange(1, n + 1, dtype=float)
        return (ns ** (-self.beta)).astype(complex)


# ---------------------------------------------------------------------------
# series and polynomials


@dataclass(frozen=True)
class DirichletSeries:
    """A formal series sum a_n e^(-lam_n s) with an accumulated translation.

    ``shift`` is the total translation applied so far; the effective
    coefficients are a_n * exp(-lam_n * shift).  Keeping the shift symbolic
    makes the translation semigroup law exact coefficientwise.
    """

    freq: Frequency
    coeffs: CoefficientSource
    label: str = ""
    shift: float = 0.0

    @property
    def is_polynomial(self) -> bool:
        return self.coeffs.is_polynomial or self.freq.length is not None

    def coefficients(self, n: int) -> np.ndarray:
        """Effective coefficients a_n e^(-lam_n shift) for n = 1..n."""
        base = self.coeffs.array(n)
        if self.shift == 0.0:
            return base
        lam = materialize(self.freq, n)
        return base * np.exp(-lam * self.shift)

    def coefficient(self, n: int) -> complex:
        return complex(self.coefficients(n)[n - 1])


@dataclass(frozen=True)
class DirichletPolynomial:
    """A finite series, stored as strictly increasing (lam_n, a_n) pairs."""

    terms: tuple  # tuple[(float, complex), ...]

    def __post_init__(self):
        lam = [t[0] for t in self.terms]
        if any(l < 0 for l in lam):
            raise FrequencyError("polynomial frequencies must be nonnegative")
        if any(b <= a for a, b in zip(lam, lam[1:])):
            raise FrequencyError("polynomial frequencies must be strictly increasing")

    @staticmethod
    def from_arrays(lam, coeffs) -> "DirichletPolynomial":
        return DirichletPolynomial(tuple((float(l), complex(c)) for l, c in zip(lam, coeffs)))

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([t[0] for t in self.terms], dtype=float)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([t[1] for t in self.terms], dtype=complex)

    def __len__(self) -> int:
        return len(self.terms)

    def evaluate(self, s: complex) -> complex:
        """Value at one point, compensated summation in ascending n."""
        if not self.terms:
            return 0.0 + 0.0j
        vals = [c * np.exp(-l * complex(s)) for l, c in self.terms]
        return complex(math.fsum(v.real for v in vals) + 1j * math.fsum(v.imag for v in vals))

    def evaluate_line(self, sigma: float, t: np.ndarray) -> np.ndarray:
        """Values at sigma + i t for an array of t."""
        out = np.zeros(len(t), dtype=complex)
        for l, c in self.terms:
            out += (c * math.exp(-l * sigma)) * np.exp(-1j * l * t)
        return out


# ---------------------------------------------------------------------------
# operations


def translate(series: DirichletSeries, sigma: float) -> DirichletSeries:
    """Translation: coefficients become a_n e^(-lam_n sigma)."""
    label = series.label
    if sigma != 0.0:
        label = f"{label} @+{sigma:g}" if label else f"@+{sigma:g}"
    return replace(series, shift=series.shift + sigma, label=label)


_MAX_MATERIALIZED_TERMS = 16_000_000


def count_below(freq: Frequency, x: float) -> int:
    """Number of terms with lam_n < x (strict).

    Slowly growing families (log log n most of all) can need astronomically
    many terms to pass a cutoff; the search is capped to keep memory bounded.
    """
    if x <= 0:
        return 0
    length = freq.length
    if length is not None:
        lam = materialize(freq, length)
        return int(np.searchsorted(lam, x, side="left"))
    n = 256
    while True:
        lam = materialize(freq, n)
        if lam[-1] >= x:
            return int(np.searchsorted(lam, x, side="left"))
        if n >= _MAX_MATERIALIZED_TERMS:
            raise FrequencyError(
                f"cutoff x={x:g} needs more than {_MAX_MATERIALIZED_TERMS} terms "
                f"of this frequency; choose a smaller x"
            )
        n *= 2


def prefix(series: DirichletSeries, n: int):
    """(lam, effective coefficients) arrays for the first n terms."""
    lam = materialize(series.freq, n)
    coeffs = series.coeffs.array(n)
    if series.shift != 0.0:
        coeffs = coeffs * np.exp(-lam * series.shift)
    return lam, coeffs


def truncate_below(series: DirichletSeries, x: float) -> DirichletPolynomial:
    """The polynomial sum_{lam_n < x} a_n e^(-lam_n s)."""
    count = count_below(series.freq, x)
    if count == 0:
        return DirichletPolynomial(())
    lam, coeffs = prefix(series, count)
    return DirichletPolynomial.from_arrays(lam, coeffs)


def partial_sum(series: DirichletSeries, x: float, s: complex) -> complex:
    """sum over {n : lam_n < x} of a_n e^(-lam_n s), ascending n, compensated."""
    if not x > 0:
        raise FrequencyError("x must be positive")
    count = count_below(series.freq, x)
    if count == 0:
        return 0.0 + 0.0j
    lam, coeffs = prefix(series, count)
    vals = coeffs * np.exp(-lam * complex(s))
    return complex(math.fsum(vals.real) + 1j * math.fsum(vals.imag))


def abschnitt(series: DirichletSeries, dec: BohrDecomposition, n_basis: int,
              horizon: int) -> DirichletPolynomial:
    """Terms n <= horizon whose decomposition rows are supported on the first
    ``n_basis`` basis columns."""
    if dec.freq is not None and dec.freq != series.freq:
        raise MismatchedDecomposition("decomposition was built for a different frequency")
    if horizon > len(dec.rows):
        raise MismatchedDecomposition(
            f"decomposition holds {len(dec.rows)} rows, horizon {horizon} requested"
        )
    lam, coeffs = prefix(series, horizon)
    keep = [
        i for i in range(horizon)
        if all(j < n_basis for j in dec.rows[i].keys())
    ]
    return DirichletPolynomial(tuple((float(lam[i]), complex(coeffs[i])) for i in keep))


# ---------------------------------------------------------------------------
# sup norms on vertical lines


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid for vertical-line sup norms: t in [-t_max, t_max]."""

    t_max: float = 100.0
    step: float = 0.05

    def __post_init__(self):
        if not (self.t_max > 0 and self.step > 0):
            raise ValueError("grid requires t_max > 0 and step > 0")

    def points(self) -> np.ndarray:
        k = int(math.ceil(self.t_max / self.step))
        return self.step * np.arange(-k, k + 1, dtype=float)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, a: float, b: float, iters: int = 80) -> float:
    """Deterministic golden-section maximum of f on [a, b]."""
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        if b - a < 1e-13:
            break
    return max(f1, f2)


def sup_norm_line(poly: DirichletPolynomial, sigma: float,
                  grid: GridSpec | None = None) -> float:
    """Lower-bound estimate of sup over t of |P(sigma + i t)|.

    Grid maximum over t in [-t_max, t_max] plus one golden-section refinement
    pass around the best grid point.  The true sup over the line (equivalently
    over the closed half plane to its right) can only exceed this value.
    """
    if grid is None:
        grid = GridSpec()
    if not poly.terms:
        return 0.0
    lam = poly.lambdas
    damped = poly.coefficients * np.exp(-lam * sigma)
    if len(poly) == 1:
        return float(abs(damped[0]))

    t = grid.points()
    best_val = -1.0
    best_t = 0.0
    chunk = 8192
    for start in range(0, len(t), chunk):
        tc = t[start : start + chunk]
        acc = np.zeros(len(tc), dtype=complex)
        for l, c in zip(lam, damped):
            acc += c * np.exp(-1j * l * tc)
        mags = np.abs(acc)
        i = int(np.argmax(mags))
        if mags[i] > best_val:
            best_val = float(mags[i])
            best_t = float(tc[i])

    def g(tt: float) -> float:
        return abs(complex(np.sum(damped * np.exp(-1j * lam * tt))))

    lo = max(best_t - grid.step, -grid.t_max)
    hi = min(best_t + grid.step, grid.t_max)
    refined = _golden_max(g, lo, hi)
    return max(best_val, refined)
