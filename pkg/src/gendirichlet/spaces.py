"""Admissible coefficient-space norms and Bohr-Cahen abscissa estimation.

The norms treat a truncated series as its coefficient sequence: lp norms, the
sup norm of the coefficients (c0), the sup of partial sums (Sigma, whose
finiteness encodes plain convergence at s = 0), and a grid sup-norm proxy for
the bounded-function space.  The Bohr-Cahen estimator scans
log ||truncation below x|| / x and takes a trailing-window maximum; the
formula computes the abscissa exactly only when that abscissa is nonnegative,
so scans that head below zero (or extrapolate to zero from above) only
support the claim "abscissa <= 0".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .frequency import AbscissaEstimate, ThreeValued, materialize
from .series import (
    DirichletPolynomial,
    DirichletSeries,
    GridSpec,
    count_below,
    prefix,
    sup_norm_line,
    translate,
)

__all__ = [
    "AdmissibleSpace",
    "EmptyScan",
    "LadderEntry",
    "AbscissaParams",
    "norm",
    "bohr_cahen_abscissa",
    "classical_abscissas",
    "seminorm_ladder",
]


class EmptyScan(ValueError):
    """No scan points were available."""


# ---------------------------------------------------------------------------
# admissible spaces


@dataclass(frozen=True)
class AdmissibleSpace:
    """Norm applied to truncations: lp(p), c0, sigma, or the sup-norm proxy.

    All of these normalize a unit monomial to 1 and have coefficient
    functionals bounded by 1 (by 2 for sigma).
    """

    kind: str                       # "lp" | "c0" | "sigma" | "dinfty"
    p: Optional[float] = None
    grid: GridSpec = field(default_factory=GridSpec)

    def __post_init__(self):
        if self.kind not in ("lp", "c0", "sigma", "dinfty"):
            raise ValueError(f"unknown space kind '{self.kind}'")
        if self.kind == "lp" and (self.p is None or self.p < 1):
            raise ValueError("lp requires p >= 1")

    @staticmethod
    def lp(p: float) -> "AdmissibleSpace":
        return AdmissibleSpace("lp", p=float(p))

    @staticmethod
    def c0() -> "AdmissibleSpace":
        return AdmissibleSpace("c0")

    @staticmethod
    def sigma() -> "AdmissibleSpace":
        return AdmissibleSpace("sigma")

    @staticmethod
    def d_infty(grid: GridSpec | None = None) -> "AdmissibleSpace":
        return AdmissibleSpace("dinfty", grid=grid if grid is not None else GridSpec())

    def label(self) -> str:
        if self.kind == "lp":
            return f"l{self.p:g}"
        return self.kind


def _coeff_norm(space: AdmissibleSpace, coeffs: np.ndarray) -> float:
    if coeffs.size == 0:
        return 0.0
    mags = np.abs(coeffs)
    if space.kind == "lp":
        return float(np.sum(mags ** space.p) ** (1.0 / space.p))
    if space.kind == "c0":
        return float(np.max(mags))
    if space.kind == "sigma":
        return float(np.max(np.abs(np.cumsum(coeffs))))
    raise ValueError("dinfty norms need frequencies; use norm() on a polynomial")


def norm(space: AdmissibleSpace, poly: DirichletPolynomial) -> float:
    """Norm of a Dirichlet polynomial.

    Exact finite arithmetic for lp/c0/sigma; for the sup-norm proxy this is a
    grid lower bound at sigma = 0 (delegates to sup_norm_line).
    """
    if space.kind == "dinfty":
        return sup_norm_line(poly, 0.0, space.grid)
    return _coeff_norm(space, poly.coefficients)


# ---------------------------------------------------------------------------
# Bohr-Cahen scans


def _default_x_points(series: DirichletSeries, n_max: int, count: int = 64) -> np.ndarray:
    length = series.freq.length
    n = n_max if length is None else min(n_max, length)
    if n < 2:
        raise EmptyScan("need at least two terms to build scan points")
    lam = materialize(series.freq, n)
    lo = lam[1]
    hi = lam[-1] * (1.0 + 1e-9) + 1e-15
    if not lo > 0:
        lo = min(x for x in lam if x > 0)
    return np.geomspace(lo, hi, count)


def _scan_norms(series: DirichletSeries, space: AdmissibleSpace,
                x_points: np.ndarray) -> np.ndarray:
    """Norms of the truncations below each x, in one cumulative pass."""
    x_max = float(np.max(x_points))
    total = count_below(series.freq, x_max)
    if total == 0:
        return np.zeros(len(x_points))
    lam, coeffs = prefix(series, total)
    cut = np.searchsorted(lam, x_points, side="left")
    mags = np.abs(coeffs)
    out = np.empty(len(x_points))
    if space.kind == "lp":
        csum = np.concatenate([[0.0], np.cumsum(mags ** space.p)])
        out = csum[cut] ** (1.0 / space.p)
    elif space.kind == "c0":
        cmax = np.concatenate([[0.0], np.maximum.accumulate(mags)])
        out = cmax[cut]
    elif space.kind == "sigma":
        cmax = np.concatenate([[0.0], np.maximum.accumulate(np.abs(np.cumsum(coeffs)))])
        out = cmax[cut]
    else:
        raise ValueError("use _sup_scan_norms for the sup-norm proxy")
    return out


def _sup_scan_norms(series: DirichletSeries, x_points: np.ndarray, grid: GridSpec,
                    partial_sup: bool) -> np.ndarray:
    """Grid sup norms of truncations at each cutoff, one incremental pass.

    With ``partial_sup`` the norm at x is sup over all prefixes N of the grid
    sup of the N-term truncation (the sigma_u proxy); otherwise it is the grid
    sup of the full truncation below x.
    """
    x_max = float(np.max(x_points))
    total = count_below(series.freq, x_max)
    t = grid.points()
    if total == 0:
        return np.zeros(len(x_points))
    lam, coeffs = prefix(series, total)
    cut = np.searchsorted(lam, x_points, side="left")
    acc = np.zeros(len(t), dtype=complex)
    running = 0.0
    out = np.zeros(len(x_points))
    order = np.argsort(cut, kind="stable")
    done = 0
    for pos in order:
        c = int(cut[pos])
        while done < c:
            acc += coeffs[done] * np.exp(-1j * lam[done] * t)
            if partial_sup:
                running = max(running, float(np.max(np.abs(acc))))
            done += 1
        out[pos] = running if partial_sup else float(np.max(np.abs(acc)))
    return out


def _fit_tail_intercept(xs: np.ndarray, vs: np.ndarray) -> float:
    """Least-squares intercept of v ~ a + b log(x)/x over the scan tail."""
    basis = np.column_stack([np.ones(len(xs)), np.log(xs) / xs])
    sol, *_ = np.linalg.lstsq(basis, vs, rcond=None)
    return float(sol[0])


_CLAMP_ESTIMATE_CEILING = 0.15
_CLAMP_INTERCEPT = 0.02
_STABLE_SPREAD = 0.02


def _estimate_from_scan(x_points: np.ndarray, norms: np.ndarray, window: int,
                        proxy_note: str | None = None) -> AbscissaEstimate:
    with np.errstate(divide="ignore"):
        scan = np.where(norms > 0, np.log(np.maximum(norms, 1e-300)), -np.inf) / x_points
    tail = scan[-window:]
    xs_tail = x_points[-window:]
    finite = np.isfinite(tail)
    if not finite.any():
        return AbscissaEstimate(
            value=-math.inf,
            confidence=ThreeValued.holds("trailing truncation norms are all zero"),
            truncation_points=tuple(x_points),
            scan=tuple(zip(x_points, scan)),
            estimate=-math.inf,
            clamped=True,
        )
    est = float(np.max(tail[finite]))
    spread = float(np.max(tail[finite]) - np.min(tail[finite])) if finite.all() else math.inf
    stable = spread < _STABLE_SPREAD

    # clamp logic: the formula is two-sided only for nonnegative abscissas
    clamped = False
    clamp_rule = None
    if finite.all() and np.all(tail < 0):
        clamped = True
        clamp_rule = "scan is eventually negative; only 'abscissa <= 0' is supported"
    elif finite.all() and est <= _CLAMP_ESTIMATE_CEILING:
        half = scan[-max(window, len(scan) // 2):]
        xs_half = x_points[-max(window, len(scan) // 2):]
        ok = np.isfinite(half)
        if ok.all() and np.all(np.diff(half) <= 1e-12):
            a = _fit_tail_intercept(xs_half, half)
            if a <= _CLAMP_INTERCEPT:
                clamped = True
                clamp_rule = (
                    f"nonincreasing tail extrapolates to {a:.3g} <= {_CLAMP_INTERCEPT}; "
                    "claim limited to 'abscissa <= 0, exact value unknown'"
                )
    note = f" ({proxy_note})" if proxy_note else ""
    if stable:
        conf = ThreeValued.holds(
            f"trailing-window spread {spread:.3g} < {_STABLE_SPREAD}{note}"
            + (f"; {clamp_rule}" if clamp_rule else "")
        )
    else:
        conf = ThreeValued.inconclusive(
            f"trailing-window spread {spread:.3g} >= {_STABLE_SPREAD}{note}"
            + (f"; {clamp_rule}" if clamp_rule else ""),
            {"window": window},
        )
    return AbscissaEstimate(
        value=est,
        confidence=conf,
        truncation_points=tuple(xs_tail),
        scan=tuple(zip(x_points, scan)),
        estimate=est,
        clamped=clamped,
    )


def _polynomial_sentinel() -> AbscissaEstimate:
    return AbscissaEstimate(
        value=-math.inf,
        confidence=ThreeValued.holds(
            "finite series: every translation lies in the space, abscissa is -infinity"
        ),
        estimate=-math.inf,
        clamped=True,
    )


def bohr_cahen_abscissa(series: DirichletSeries, space: AdmissibleSpace,
                        x_points=None, window: int | None = None,
                        n_max: int | None = None) -> AbscissaEstimate:
    """Abscissa estimate from the scan x -> log ||truncation below x|| / x.

    The estimate is the trailing-window maximum; confidence is Holds only when
    the trailing window has visibly stabilized (spread < 0.02).  The estimator
    is exact only when the true abscissa is nonnegative; finite series return
    the -infinity sentinel directly, and scans heading to or below zero clamp
    the claim to "abscissa <= 0".
    """
    if series.is_polynomial:
        return _polynomial_sentinel()
    if x_points is None:
        x_points = _default_x_points(series, n_max if n_max is not None else series.freq.n_max)
    x_points = np.asarray(x_points, dtype=float)
    if x_points.size == 0:
        raise EmptyScan("x_points is empty")
    if np.any(x_points <= 0) or np.any(np.diff(x_points) <= 0):
        raise EmptyScan("x_points must be positive and increasing")
    if window is None:
        window = max(2, len(x_points) // 8)
    window = min(window, len(x_points))
    if space.kind == "dinfty":
        norms = _sup_scan_norms(series, x_points, space.grid, partial_sup=False)
    else:
        norms = _scan_norms(series, space, x_points)
    return _estimate_from_scan(x_points, norms, window)


# ---------------------------------------------------------------------------
# classical abscissas


@dataclass(frozen=True)
class AbscissaParams:
    """Scan sizes for the classical abscissa estimates.

    sigma_c / sigma_a scans run to ``n_max`` terms; the sup-norm proxies for
    sigma_b / sigma_u are capped at ``sup_horizon`` terms with their own grid,
    so those two are explicitly grid-dependent lower-bound machinery.
    """

    n_max: int = 100_000
    x_count: int = 64
    window: int = 8
    sup_horizon: int = 800
    sup_x_count: int = 24
    grid: GridSpec = field(default_factory=lambda: GridSpec(t_max=40.0, step=0.05))


def classical_abscissas(series: DirichletSeries,
                        params: AbscissaParams | None = None) -> dict:
    """Estimates of the convergence, absolute, bounded and uniform abscissas.

    sigma_c uses the partial-sum (Sigma) norm, sigma_a the l1 norm; sigma_b
    and sigma_u use the sup-norm proxy (full truncation, respectively the sup
    over all partial sums), and are marked as grid-dependent proxies.
    """
    if params is None:
        params = AbscissaParams()
    if series.is_polynomial:
        s = _polynomial_sentinel()
        return {"sigma_c": s, "sigma_a": s, "sigma_b_proxy": s, "sigma_u_proxy": s}

    xs = _default_x_points(series, params.n_max, params.x_count)
    sigma_c = _estimate_from_scan(
        xs, _scan_norms(series, AdmissibleSpace.sigma(), xs), params.window)
    sigma_a = _estimate_from_scan(
        xs, _scan_norms(series, AdmissibleSpace.lp(1.0), xs), params.window)

    sup_xs = _default_x_points(series, params.sup_horizon, params.sup_x_count)
    sup_window = max(2, params.sup_x_count // 8)
    sigma_b = _estimate_from_scan(
        sup_xs, _sup_scan_norms(series, sup_xs, params.grid, partial_sup=False),
        sup_window, proxy_note="grid-dependent sup-norm proxy")
    sigma_u = _estimate_from_scan(
        sup_xs, _sup_scan_norms(series, sup_xs, params.grid, partial_sup=True),
        sup_window, proxy_note="grid-dependent partial-sup proxy")
    return {
        "sigma_c": sigma_c,
        "sigma_a": sigma_a,
        "sigma_b_proxy": sigma_b,
        "sigma_u_proxy": sigma_u,
    }


# ---------------------------------------------------------------------------
# seminorm ladder


@dataclass(frozen=True)
class LadderEntry:
    k: int
    value: float
    diverged: bool


_CONVERGENCE_INCREMENT = 1e-6


def seminorm_ladder(series: DirichletSeries, space: AdmissibleSpace,
                    k_max: int, horizon: int | None = None) -> list:
    """Norms of the translated series at sigma = 1/k for k = 1..k_max.

    Each value is the norm of the first ``horizon`` terms of the translate;
    the divergence flag is set when the doubling-horizon increment
    (horizon/2 -> horizon) fails to shrink below 1e-6, i.e. the truncated
    norms have not numerically converged.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    horizon = horizon if horizon is not None else min(series.freq.n_max, 100_000)
    length = series.freq.length
    if length is not None:
        horizon = min(horizon, length)
    out = []
    lam, coeffs = prefix(series, horizon)
    for k in range(1, k_max + 1):
        damped = coeffs * np.exp(-lam / k)
        if space.kind == "dinfty":
            value = sup_norm_line(DirichletPolynomial.from_arrays(lam, damped),
                                  0.0, space.grid)
            half = sup_norm_line(
                DirichletPolynomial.from_arrays(lam[: horizon // 2], damped[: horizon // 2]),
                0.0, space.grid)
        else:
            value = _coeff_norm(space, damped)
            half = _coeff_norm(space, damped[: horizon // 2])
        diverged = not (abs(value - half) < _CONVERGENCE_INCREMENT)
        out.append(LadderEntry(k=k, value=float(value), diverged=diverged))
    return out
