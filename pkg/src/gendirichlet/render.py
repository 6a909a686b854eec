"""Output rendering shared by the CLI and the HTTP service: 12-significant-
digit float formatting, JSON-safe coercion, and the CSV emitters."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

import numpy as np

from .frequency import AbscissaEstimate, BohrDecomposition

__all__ = [
    "fmt12",
    "json_safe",
    "scan_csv",
    "ladder_csv",
    "kernel_profile_csv",
    "riesz_scan_csv",
    "koethe_block_csv",
    "gp_table_csv",
    "decomposition_rows",
]


def fmt12(value) -> str:
    """Render a float with 12 significant digits."""
    v = float(value)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return f"{v:.12g}"


def json_safe(obj):
    """Coerce values into JSON-representable form.

    Floats are rounded to 12 significant digits; infinities and NaN become
    strings; Fractions become "p/q"; numpy scalars and containers unwrap.
    """
    if obj is None or isinstance(obj, (bool, str, int)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return float(f"{v:.12g}")
    if isinstance(obj, complex):
        return [json_safe(obj.real), json_safe(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, np.ndarray)):
        return [json_safe(v) for v in obj]
    return str(obj)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt12(v) if isinstance(v, (int, float, np.floating)) and not isinstance(v, bool)
                              else str(v) for v in row))
    return "\n".join(lines) + "\n"


def scan_csv(estimate: AbscissaEstimate, space_kind: str, k: int | str = "") -> str:
    """Abscissa scan table: columns x, lognorm_over_x, space_kind, k."""
    rows = [(x, v, space_kind, k) for x, v in estimate.scan]
    return _csv(("x", "lognorm_over_x", "space_kind", "k"), rows)


def ladder_csv(entries, space_kind: str) -> str:
    """Seminorm ladder table: columns k, value, diverged, space_kind."""
    rows = [(e.k, e.value, e.diverged, space_kind) for e in entries]
    return _csv(("k", "value", "diverged", "space_kind"), rows)


def kernel_profile_csv(ts, x: float, sigma: float) -> str:
    """Kernel profile table: columns t, K, P, K_hat, P_hat."""
    from .summation import KernelSpec, kernel_eval, kernel_ft

    fej = KernelSpec.fejer(x)
    poi = KernelSpec.poisson(sigma)
    rows = [
        (t, kernel_eval(fej, t), kernel_eval(poi, t), kernel_ft(fej, t), kernel_ft(poi, t))
        for t in ts
    ]
    return _csv(("t", "K", "P", "K_hat", "P_hat"), rows)


def riesz_scan_csv(rows) -> str:
    """Riesz scan table: columns x, sup_norm, log_over_x."""
    return _csv(("x", "sup_norm", "log_over_x"), rows)


def koethe_block_csv(block: np.ndarray) -> str:
    """Weight-matrix block: columns n, k, entry."""
    rows = [
        (n + 1, k + 1, block[n, k])
        for n in range(block.shape[0])
        for k in range(block.shape[1])
    ]
    return _csv(("n", "k", "entry"), rows)


def gp_table_csv(per_k: dict) -> str:
    """Nuclearity-search table: columns k, m, partial_sum, increment."""
    rows = []
    for k, data in sorted(per_k.items()):
        for trial in data["trials"]:
            rows.append((k, trial["m"], trial["partial_sum"], trial["increment"]))
    return _csv(("k", "m", "partial_sum", "increment"), rows)


def decomposition_rows(dec: BohrDecomposition, limit: int | None = None):
    """Sparse JSON-friendly rows: [{column, numerator, denominator}, ...] per term."""
    n = len(dec.rows) if limit is None else min(limit, len(dec.rows))
    out = []
    for i in range(n):
        row = [
            {"column": j + 1, "numerator": r.numerator, "denominator": r.denominator}
            for j, r in sorted(dec.rows[i].items())
        ]
        out.append(row)
    return out
