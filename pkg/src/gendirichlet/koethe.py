"""The exponential weight matrix A(lam) = (e^(-lam_n/k)), weighted sequence
norms, and the summability test for nuclearity of the associated echelon
spaces.

The nuclearity test has an exact route (the strip width L decides it: L = 0
if and only if for every k some m > k makes sum e^(-lam_n (1/k - 1/m))
finite) and a numeric route for finite data, which can only ever report
Inconclusive because finite partial sums certify nothing about convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frequency import (
    Frequency,
    ThreeValued,
    estimate_L,
    materialize,
)
from .series import CoefficientSource

__all__ = [
    "KoetheMatrix",
    "koethe_entry",
    "weighted_norm",
    "gp_nuclearity_test",
    "projective_seminorm",
]


@dataclass(frozen=True)
class KoetheMatrix:
    """Weight matrix a_{n,k} = e^(-lam_n / k) for a frequency.

    Entries are strictly increasing in k whenever lam_n > 0 and equal to 1
    when lam_n = 0; all entries lie in (0, 1].
    """

    freq: Frequency

    def entry(self, n: int, k: int) -> float:
        if n < 1 or k < 1:
            raise ValueError("n and k must be >= 1")
        lam = materialize(self.freq, n)[n - 1]
        return math.exp(-lam / k)

    def column(self, k: int, n_max: int) -> np.ndarray:
        lam = materialize(self.freq, n_max)
        return np.exp(-lam / k)

    def block(self, n_max: int, k_max: int) -> np.ndarray:
        """Materialized (n_max, k_max) block."""
        lam = materialize(self.freq, n_max)
        ks = np.arange(1, k_max + 1, dtype=float)
        return np.exp(-np.outer(lam, 1.0 / ks))


def koethe_entry(matrix: KoetheMatrix, n: int, k: int) -> float:
    return matrix.entry(n, k)


_CONVERGENCE_INCREMENT = 1e-6


def _coeff_array(coeffs, n: int) -> np.ndarray:
    if isinstance(coeffs, CoefficientSource):
        return coeffs.array(n)
    arr = np.asarray(coeffs, dtype=complex)
    out = np.zeros(n, dtype=complex)
    take = min(n, arr.size)
    out[:take] = arr[:take]
    return out


def weighted_norm(matrix: KoetheMatrix, coeffs, p, k: int,
                  horizon: int | None = None) -> tuple:
    """Truncated weighted norm at level k with a doubling-horizon flag.

    ``p`` is a real >= 1 or the string "c0" (sup norm).  Returns
    (value, diverged); diverged means the horizon/2 -> horizon increment did
    not shrink below 1e-6, i.e. the truncations have not numerically settled.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    horizon = horizon if horizon is not None else min(matrix.freq.n_max, 100_000)
    length = matrix.freq.length
    if length is not None:
        horizon = min(horizon, length)
    lam = materialize(matrix.freq, horizon)
    weighted = np.abs(_coeff_array(coeffs, horizon)) * np.exp(-lam / k)

    def value_at(h: int) -> float:
        w = weighted[:h]
        if isinstance(p, str):
            if p != "c0":
                raise ValueError("p must be a real >= 1 or 'c0'")
            return float(np.max(w)) if h else 0.0
        if p < 1:
            raise ValueError("p must be >= 1")
        return float(np.sum(w ** p) ** (1.0 / p))

    full = value_at(horizon)
    half = value_at(horizon // 2)
    return full, not (abs(full - half) < _CONVERGENCE_INCREMENT)


def _numeric_gp_table(freq: Frequency, k_max: int, n_max: int) -> dict:
    """Per-k search for a working m in k+1..4k, with doubling partial sums."""
    length = freq.length
    horizon = n_max if length is None else min(n_max, length)
    lam = materialize(freq, horizon)
    table = {}
    for k in range(1, k_max + 1):
        best = None
        trials = []
        for m in range(k + 1, 4 * k + 1):
            rate = 1.0 / k - 1.0 / m
            terms = np.exp(-lam * rate)
            full = float(np.sum(terms))
            half = float(np.sum(terms[: horizon // 2]))
            increment = full - half
            trials.append({"m": m, "partial_sum": full, "increment": increment})
            if increment < _CONVERGENCE_INCREMENT:
                best = m
                break
        table[k] = {"witness_m": best, "trials": trials}
    return table


def gp_nuclearity_test(freq: Frequency, k_max: int = 6,
                       n_max: int = 20_000) -> ThreeValued:
    """Summability test for nuclearity of the echelon spaces over A(lam).

    Exact route for symbolic families: nuclear holds iff L = 0 and fails iff
    L > 0.  Finite kinds take the numeric route: search m in k+1..4k per k
    and report the partial-sum evidence, but the verdict stays Inconclusive
    because convergence of an infinite sum is never certified from finite
    data.  The per-k witness table is attached either way.
    """
    est = estimate_L(freq, n_max=min(n_max, freq.n_max if freq.length is None else freq.length))
    table = _numeric_gp_table(freq, k_max, n_max)
    if est.exact is not None:
        if est.exact == 0.0:
            return ThreeValued.holds(
                "L = 0, so for every k some m > k makes the weight-ratio sum finite",
                {"L": 0.0, "per_k": table},
            )
        return ThreeValued.fails(
            f"L = {est.exact:g} > 0, so the weight-ratio sum diverges for every k, m",
            {"L": est.exact, "per_k": table},
        )
    return ThreeValued.inconclusive(
        "finite data cannot certify convergence of the weight-ratio sums",
        {"per_k": table},
    )


def projective_seminorm(values, n: int) -> float:
    """Running maximum of the first n level norms (1-based n)."""
    vals = list(values)
    if not 1 <= n <= len(vals):
        raise ValueError("need 1 <= n <= len(values)")
    return float(max(vals[:n]))
