"""Frequencies and their structural properties.

A frequency is a strictly increasing unbounded sequence of nonnegative reals
indexing a general Dirichlet series.  This module materializes the built-in
families, estimates the convergence-strip width L = limsup log(n)/lam_n,
checks the Bohr/Landau gap conditions, produces exact basis decompositions
(rational matrix R and basis B with lam = R*B), classifies whether the
uniform-convergence theorem is known to hold, and checks hypercontractivity
of the translation semigroup.

Verdicts about asymptotic properties are three-valued: finite data never
certifies an asymptotic statement, so explicit (finite) frequencies come back
Inconclusive and only registered analytic facts about the symbolic families
produce Holds/Fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

__all__ = [
    "Verdict",
    "ThreeValued",
    "Frequency",
    "FrequencyKind",
    "BasisElement",
    "BohrDecomposition",
    "AbscissaEstimate",
    "FrequencyError",
    "NonMonotone",
    "OutOfRange",
    "Degenerate",
    "UnsupportedKind",
    "materialize",
    "primes",
    "prime_exponents",
    "estimate_L",
    "check_bohr_condition",
    "check_landau_condition",
    "bohr_decomposition",
    "classify_bohr_theorem",
    "check_hypercontractive",
]


class FrequencyError(ValueError):
    """Invalid frequency data or unsupported request."""


class NonMonotone(FrequencyError):
    """Explicit values are not nonnegative and strictly increasing."""


class OutOfRange(FrequencyError):
    """Requested more terms than a finite frequency provides."""


class Degenerate(FrequencyError):
    """Every materialized term is zero; no scan is possible."""


class UnsupportedKind(FrequencyError):
    """Operation not defined for this frequency kind."""


# ---------------------------------------------------------------------------
# three-valued verdicts


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ThreeValued:
    """A verdict plus the rule that produced it and/or a concrete witness.

    Fails always carries a finite witness; Holds for a symbolic family always
    carries the analytic rule used.
    """

    verdict: Verdict
    rule: Optional[str] = None
    witness: Optional[dict] = None

    @staticmethod
    def holds(rule: str, witness: dict | None = None) -> "ThreeValued":
        return ThreeValued(Verdict.HOLDS, rule, witness)

    @staticmethod
    def fails(rule: str, witness: dict) -> "ThreeValued":
        return ThreeValued(Verdict.FAILS, rule, witness)

    @staticmethod
    def inconclusive(rule: str | None = None, witness: dict | None = None) -> "ThreeValued":
        return ThreeValued(Verdict.INCONCLUSIVE, rule, witness)

    @property
    def is_holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def is_fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    @property
    def is_inconclusive(self) -> bool:
        return self.verdict is Verdict.INCONCLUSIVE

    def __post_init__(self):
        if self.verdict is Verdict.FAILS and self.witness is None:
            raise ValueError("a Fails verdict requires a concrete witness")


# ---------------------------------------------------------------------------
# frequency families


class FrequencyKind(str, Enum):
    LOG_N = "log_n"
    N = "n"
    LOG_N_POW = "log_n_pow"
    LOG_PRIME = "log_prime"
    SCALED_LOG_N = "scaled_log_n"
    LOG_LOG_N = "log_log_n"
    EXPLICIT = "explicit"
    RATIONAL_COMBINATION = "rational_combination"


_SYMBOLIC = {
    FrequencyKind.LOG_N,
    FrequencyKind.N,
    FrequencyKind.LOG_N_POW,
    FrequencyKind.LOG_PRIME,
    FrequencyKind.SCALED_LOG_N,
    FrequencyKind.LOG_LOG_N,
}


@dataclass(frozen=True)
class Frequency:
    """A frequency family, symbolic or explicit.

    ``n_max`` is the default truncation horizon used by numeric scans; it does
    not bound symbolic families, which generate arbitrarily many terms.
    """

    kind: FrequencyKind
    alpha: Optional[float] = None          # log_n_pow exponent
    c: Optional[Fraction] = None           # scaled_log_n factor
    values: Optional[tuple] = None         # explicit terms
    basis: Optional[tuple] = None          # rational_combination basis
    matrix: Optional[tuple] = None         # rational_combination rows (tuples of Fraction)
    n_max: int = 10_000

    def __post_init__(self):
        if self.n_max < 1:
            raise FrequencyError("n_max must be a positive integer")
        if self.kind is FrequencyKind.LOG_N_POW:
            if self.alpha is None or not self.alpha > 0:
                raise FrequencyError("log_n_pow requires a positive exponent alpha")
        if self.kind is FrequencyKind.SCALED_LOG_N:
            if self.c is None or not self.c > 0:
                raise FrequencyError("scaled_log_n requires a positive rational factor")
        if self.kind is FrequencyKind.EXPLICIT:
            if not self.values:
                raise FrequencyError("explicit frequency requires at least one value")
            _validate_increasing(np.asarray(self.values, dtype=float))
        if self.kind is FrequencyKind.RATIONAL_COMBINATION:
            if not self.basis or self.matrix is None or len(self.matrix) == 0:
                raise FrequencyError("rational_combination requires a basis and matrix rows")
            if any(not b > 0 for b in self.basis):
                raise FrequencyError("rational_combination basis entries must be positive")
            width = len(self.basis)
            for row in self.matrix:
                if len(row) > width:
                    raise FrequencyError("matrix row wider than basis")
            _validate_increasing(_combination_values(self.basis, self.matrix))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def log_n(n_max: int = 10_000) -> "Frequency":
        return Frequency(FrequencyKind.LOG_N, n_max=n_max)

    @staticmethod
    def naturals(n_max: int = 10_000) -> "Frequency":
        """The family (0, 1, 2, ...)."""
        return Frequency(FrequencyKind.N, n_max=n_max)

    @staticmethod
    def log_n_pow(alpha: float, n_max: int = 10_000) -> "Frequency":
        return Frequency(FrequencyKind.LOG_N_POW, alpha=float(alpha), n_max=n_max)

    @staticmethod
    def log_prime(n_max: int = 10_000) -> "Frequency":
        return Frequency(FrequencyKind.LOG_PRIME, n_max=n_max)

    @staticmethod
    def scaled_log_n(c, n_max: int = 10_000) -> "Frequency":
        return Frequency(FrequencyKind.SCALED_LOG_N, c=Fraction(c), n_max=n_max)

    @staticmethod
    def log_log_n(n_max: int = 10_000) -> "Frequency":
        """The family log log(n + 2); its Bohr-theorem status is an open question."""
        return Frequency(FrequencyKind.LOG_LOG_N, n_max=n_max)

    @staticmethod
    def explicit(values) -> "Frequency":
        vals = tuple(float(v) for v in values)
        return Frequency(FrequencyKind.EXPLICIT, values=vals, n_max=len(vals))

    @staticmethod
    def rational_combination(basis, rows, n_max: int | None = None) -> "Frequency":
        b = tuple(float(x) for x in basis)
        m = tuple(tuple(Fraction(r) for r in row) for row in rows)
        return Frequency(
            FrequencyKind.RATIONAL_COMBINATION, basis=b, matrix=m,
            n_max=n_max if n_max is not None else len(m),
        )

    # -- structure ---------------------------------------------------------

    @property
    def is_symbolic(self) -> bool:
        return self.kind in _SYMBOLIC

    @property
    def length(self) -> Optional[int]:
        """Number of terms for finite kinds, None for symbolic families."""
        if self.kind is FrequencyKind.EXPLICIT:
            return len(self.values)
        if self.kind is FrequencyKind.RATIONAL_COMBINATION:
            return len(self.matrix)
        return None

    def label(self) -> str:
        k = self.kind
        if k is FrequencyKind.LOG_N:
            return "log n"
        if k is FrequencyKind.N:
            return "n-1 (0,1,2,...)"
        if k is FrequencyKind.LOG_N_POW:
            return f"(log n)^{self.alpha:g}"
        if k is FrequencyKind.LOG_PRIME:
            return "log p_n"
        if k is FrequencyKind.SCALED_LOG_N:
            return f"{self.c} * log n"
        if k is FrequencyKind.LOG_LOG_N:
            return "log log(n+2)"
        if k is FrequencyKind.EXPLICIT:
            return f"explicit[{len(self.values)}]"
        return f"rational_combination[{len(self.matrix)}]"


def _validate_increasing(vals: np.ndarray) -> None:
    if vals.size and vals[0] < 0:
        raise NonMonotone("frequency values must be nonnegative")
    if vals.size > 1 and not np.all(np.diff(vals) > 0):
        bad = int(np.flatnonzero(np.diff(vals) <= 0)[0])
        raise NonMonotone(
            f"frequency values must be strictly increasing "
            f"(violated at index {bad + 1}: {vals[bad]!r} >= {vals[bad + 1]!r})"
        )


def _combination_values(basis, matrix) -> np.ndarray:
    out = np.empty(len(matrix))
    for i, row in enumerate(matrix):
        # fixed summation order keeps materialization bit-for-bit reproducible
        out[i] = math.fsum(float(r) * b for r, b in zip(row, basis) if r != 0)
    return out


# ---------------------------------------------------------------------------
# primes (deterministic sieve)

_PRIME_CACHE = np.array([2, 3, 5, 7, 11, 13], dtype=np.int64)


def primes(count: int) -> np.ndarray:
    """First ``count`` primes, via an Eratosthenes sieve with a Rosser bound.

    The cache swap is a single idempotent assignment, so concurrent callers
    at worst re-sieve; they never observe a partially built table.
    """
    global _PRIME_CACHE
    if count <= _PRIME_CACHE.size:
        return _PRIME_CACHE[:count]
    bound = 16
    if count >= 6:
        x = float(count)
        bound = int(x * (math.log(x) + math.log(math.log(x)))) + 10
    while True:
        sieve = np.ones(bound + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, int(bound ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        found = np.flatnonzero(sieve)
        if found.size >= count:
            _PRIME_CACHE = found.astype(np.int64)
            return _PRIME_CACHE[:count]
        bound *= 2


def prime_exponents(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}, by trial division."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict = {}
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# ---------------------------------------------------------------------------
# materialization


def materialize(freq: Frequency, n: int) -> np.ndarray:
    """First n terms of the frequency, in full double precision.

    Raises OutOfRange when a finite kind holds fewer than n terms and
    NonMonotone when explicit data violates strict increase.  Every returned
    prefix is checked strictly increasing with first term >= 0.
    """
    if n < 1:
        raise FrequencyError("n must be a positive integer")
    k = freq.kind
    if k is FrequencyKind.LOG_N:
        vals = np.log(np.arange(1, n + 1, dtype=float))
    elif k is FrequencyKind.N:
        vals = np.arange(0, n, dtype=float)
    elif k is FrequencyKind.LOG_N_POW:
        vals = np.log(np.arange(1, n + 1, dtype=float)) ** freq.alpha
    elif k is FrequencyKind.LOG_PRIME:
        vals = np.log(primes(n).astype(float))
    elif k is FrequencyKind.SCALED_LOG_N:
        vals = float(freq.c) * np.log(np.arange(1, n + 1, dtype=float))
    elif k is FrequencyKind.LOG_LOG_N:
        vals = np.log(np.log(np.arange(3, n + 3, dtype=float)))
    elif k is FrequencyKind.EXPLICIT:
        if n > len(freq.values):
            raise OutOfRange(f"explicit frequency has {len(freq.values)} terms, requested {n}")
        vals = np.asarray(freq.values[:n], dtype=float)
    elif k is FrequencyKind.RATIONAL_COMBINATION:
        if n > len(freq.matrix):
            raise OutOfRange(f"rational_combination has {len(freq.matrix)} rows, requested {n}")
        vals = _combination_values(freq.basis, freq.matrix[:n])
    else:  # pragma: no cover
        raise UnsupportedKind(f"unknown kind {k}")
    _validate_increasing(vals)
    return vals


def _cap(freq: Frequency, n: int) -> int:
    length = freq.length
    return n if length is None else min(n, length)


# ---------------------------------------------------------------------------
# abscissa estimates


@dataclass(frozen=True)
class AbscissaEstimate:
    """A limsup-style abscissa estimate with its scan metadata.

    ``value`` is the headline number: the exact family value when one is
    registered, otherwise the trailing-window maximum of the scan.  ``clamped``
    means only the claim "abscissa <= 0, exact value unknown" is supported.
    """

    value: float
    confidence: ThreeValued
    truncation_points: tuple = ()
    scan: tuple = ()
    exact: Optional[float] = None
    estimate: Optional[float] = None
    clamped: bool = False

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def _decimate(xs, ys, keep: int = 200):
    n = len(xs)
    if n <= keep:
        return tuple(zip(xs, ys))
    idx = np.unique(np.linspace(0, n - 1, keep).astype(int))
    return tuple((xs[i], ys[i]) for i in idx)


_L_EXACT_RULES = {
    FrequencyKind.LOG_N: (1.0, "limsup log n / log n = 1"),
    FrequencyKind.N: (0.0, "limsup log n / (n-1) = 0"),
    FrequencyKind.LOG_PRIME: (1.0, "log p_n = log n + log log n + O(1)"),
    FrequencyKind.LOG_LOG_N: (math.inf, "log n / log log n is unbounded"),
}


def exact_strip_width(freq: Frequency) -> tuple[Optional[float], Optional[str]]:
    """Registered closed-form value of L for symbolic families, else (None, None)."""
    k = freq.kind
    if k in _L_EXACT_RULES:
        return _L_EXACT_RULES[k]
    if k is FrequencyKind.LOG_N_POW:
        a = freq.alpha
        if a > 1:
            return 0.0, f"limsup (log n)^(1-{a:g}) = 0 for alpha > 1"
        if a == 1:
            return 1.0, "limsup log n / log n = 1"
        return math.inf, f"(log n)^(1-{a:g}) is unbounded for alpha < 1"
    if k is FrequencyKind.SCALED_LOG_N:
        return 1.0 / float(freq.c), f"limsup log n / ({freq.c} log n) = {Fraction(1, 1) / freq.c}"
    return None, None


def estimate_L(freq: Frequency, n_max: int | None = None, window: int | None = None) -> AbscissaEstimate:
    """Estimate L = limsup log(n)/lam_n, the maximal convergence/absolute-convergence gap.

    The numeric estimate is the maximum of log(n)/lam_n over the trailing
    ``window`` indices (default n_max // 10).  Symbolic families additionally
    report their registered exact value with a Holds confidence; explicit
    kinds are Inconclusive because finite data cannot pin a limsup.
    """
    n_max = _cap(freq, n_max if n_max is not None else freq.n_max)
    lam = materialize(freq, n_max)
    pos = np.flatnonzero(lam > 0)
    if pos.size == 0:
        raise Degenerate("all materialized terms are zero")
    if window is None:
        window = max(2, n_max // 10)
    if not (n_max >= window >= 2):
        raise FrequencyError("need n_max >= window >= 2")
    idx = pos[pos >= 1]  # skip n = 1 where log n = 0 regardless
    if idx.size == 0:
        raise Degenerate("no index with both n >= 2 and lam_n > 0")
    ns = idx + 1  # 1-based index
    scan = np.log(ns.astype(float)) / lam[idx]
    tail = scan[-min(window, scan.size):]
    numeric = float(np.max(tail))
    xs = ns.astype(float)

    exact, rule = exact_strip_width(freq)
    if exact is not None:
        conf = ThreeValued.holds(rule)
        value = exact
    else:
        conf = ThreeValued.inconclusive(
            "no registered closed form; trailing-window estimate only",
            {"window": int(min(window, scan.size)), "n_max": n_max},
        )
        value = numeric
    return AbscissaEstimate(
        value=value,
        confidence=conf,
        truncation_points=tuple(xs[-min(window, scan.size):]),
        scan=_decimate(xs, scan),
        exact=exact,
        estimate=numeric,
    )


# ---------------------------------------------------------------------------
# gap conditions (BC) and (LC)


def _gap_scan_bc(lam: np.ndarray, rate: float):
    """Empirical constants C_n = (lam_{n+1}-lam_n) * exp(rate * lam_n).

    The exponent is capped at 700 to stay finite; a capped C_n is already far
    above any decay threshold, so the cap cannot flip a verdict.
    """
    gaps = np.diff(lam)
    return gaps * np.exp(np.minimum(rate * lam[:-1], 700.0))


def _gap_scan_lc(lam: np.ndarray, delta: float):
    """log C_n = log(gap) + exp(delta * lam_n); kept in log space (double exp)."""
    gaps = np.diff(lam)
    logc = np.where(gaps > 0, np.log(np.maximum(gaps, 1e-300)), -np.inf)
    inner = delta * lam[:-1]
    # exp(inner) saturates float range long before the condition could fail
    bump = np.exp(np.minimum(inner, 700.0))
    return logc + bump


def _trailing_witness(ns, cs, count: int = 8) -> dict:
    take = min(count, len(ns))
    return {
        "indices": [int(n) for n in ns[-take:]],
        "trailing_C": [float(c) for c in cs[-take:]],
    }


def _bc_family_rule(freq: Frequency, l: float, delta: float) -> Optional[ThreeValued]:
    k = freq.kind
    if k is FrequencyKind.N:
        return ThreeValued.holds("gaps are constantly 1 >= C e^{-(l+d) lam_n} with C = 1")
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N):
        c = 1.0 if k is FrequencyKind.LOG_N else float(freq.c)
        # gap = c log(1+1/n) ~ c/n against n^{-c(l+delta)}
        if c * (l + delta) >= 1.0:
            return ThreeValued.holds(
                f"c*log(1+1/n) ~ c/n >= C n^(-c(l+d)) since c(l+d) = {c * (l + delta):g} >= 1"
            )
        return None  # fails; confirmed by numerics below
    if k is FrequencyKind.LOG_N_POW:
        a = freq.alpha
        if a > 1:
            return ThreeValued.holds(
                "gaps ~ a (log n)^{a-1}/n decay polynomially while "
                "e^{-(l+d)(log n)^a} decays super-polynomially for alpha > 1"
            )
        if a == 1.0 and (l + delta) >= 1.0:
            return ThreeValued.holds("alpha = 1 reduces to the log n family")
        return None
    if k is FrequencyKind.LOG_PRIME:
        if l >= 1.0:
            return ThreeValued.holds(
                "log(p_{n+1}/p_n) >= log(1+1/p_n) >= 1/(2 p_n) >= C p_n^{-(l+d)} for l >= 1"
            )
        return ThreeValued.inconclusive(
            "refuting the gap bound for l < 1 needs bounded-prime-gap theorems"
        )
    return None


def _bc_family_fails(freq: Frequency, l: float, delta: float) -> Optional[str]:
    """Rule string when the family is known to fail the (l, delta) bound."""
    k = freq.kind
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N):
        c = 1.0 if k is FrequencyKind.LOG_N else float(freq.c)
        if c * (l + delta) < 1.0:
            return f"C_n ~ c n^(c(l+d)-1) -> 0 since c(l+d) = {c * (l + delta):g} < 1"
    if k is FrequencyKind.LOG_N_POW:
        a = freq.alpha
        if a < 1:
            return (
                "gaps ~ a (log n)^{a-1}/n decay like 1/n while the bound "
                "e^{-(l+d)(log n)^a} = n^{-(l+d)(log n)^{a-1}} decays slower for alpha < 1"
            )
        if a == 1.0 and (l + delta) < 1.0:
            return f"C_n ~ n^(l+d-1) -> 0 since l+d = {l + delta:g} < 1"
    if k is FrequencyKind.LOG_LOG_N:
        return (
            "gaps ~ 1/(n log n) decay polynomially while the bound "
            "(log n)^{-(l+d)} decays only logarithmically"
        )
    return None


_FAILS_DECAY_THRESHOLD = 1e-3


def check_bohr_condition(freq: Frequency, l: float, delta: float = 0.01,
                         n_max: int | None = None) -> ThreeValued:
    """Check the gap bound lam_{n+1} - lam_n >= C e^{-(l+delta) lam_n}.

    Holds comes from a registered analytic family rule; Fails requires both a
    registered rule and empirical C_n below 1e-3 across the trailing window
    (pure numerics alone yield Inconclusive, to avoid refutations from slow
    decay).  The empirical constant is always reported.
    """
    if not l > 0 or not delta > 0:
        raise FrequencyError("l and delta must be positive")
    n_max = _cap(freq, max(n_max if n_max is not None else freq.n_max, 3))
    if n_max < 2:
        return ThreeValued.inconclusive("fewer than two terms; no gaps to test")
    lam = materialize(freq, n_max)
    cs = _gap_scan_bc(lam, l + delta)
    ns = np.arange(1, len(cs) + 1)
    window = max(2, len(cs) // 10)
    tail = cs[-window:]
    empirical = {"min_C": float(np.min(cs)), "tail_min_C": float(np.min(tail)),
                 "l": l, "delta": delta, "n_max": int(n_max)}

    fact = _bc_family_rule(freq, l, delta)
    if fact is not None:
        return replace(fact, witness=empirical) if fact.witness is None else fact
    fail_rule = _bc_family_fails(freq, l, delta)
    if fail_rule is not None and float(np.max(tail)) < _FAILS_DECAY_THRESHOLD:
        wit = _trailing_witness(ns, cs)
        wit.update(empirical)
        return ThreeValued.fails(fail_rule, wit)
    if fail_rule is not None:
        # registered decay rule, but the horizon has not yet decayed past the
        # threshold; keep the honest empirical answer
        return ThreeValued.inconclusive(
            f"registered decay rule ({fail_rule}) not yet confirmed at this horizon", empirical
        )
    return ThreeValued.inconclusive("no registered family rule; empirical C only", empirical)


def _lc_family_rule(freq: Frequency, delta: float) -> Optional[ThreeValued]:
    k = freq.kind
    if k is FrequencyKind.LOG_N_POW:
        return ThreeValued.holds(
            "(log n)^alpha families satisfy the Landau bound for every delta > 0"
        )
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N,
             FrequencyKind.N, FrequencyKind.LOG_PRIME):
        return ThreeValued.holds(
            "the Bohr gap condition holds for this family and implies the Landau bound"
        )
    if k is FrequencyKind.LOG_LOG_N:
        if delta <= 1.0:
            return None  # fails; see _lc_family_fails
        return ThreeValued.holds(
            "e^{-(log n)^delta} decays super-polynomially for delta > 1 "
            "while gaps ~ 1/(n log n) decay polynomially"
        )
    return None


def _lc_family_fails(freq: Frequency, delta: float) -> Optional[str]:
    if freq.kind is FrequencyKind.LOG_LOG_N and delta <= 1.0:
        return (
            "gaps ~ 1/(n log n) against e^{-(log n)^delta} = n^{-(log n)^{delta-1}}: "
            "the ratio tends to 0 for delta <= 1"
        )
    return None


def check_landau_condition(freq: Frequency, delta: float = 0.5,
                           n_max: int | None = None) -> ThreeValued:
    """Check the weaker gap bound lam_{n+1} - lam_n >= C e^{-e^{delta lam_n}}.

    Same verdict policy as check_bohr_condition.  A family that satisfies the
    Bohr condition automatically satisfies this one; that implication is the
    registered rule for the concrete families.
    """
    if not delta > 0:
        raise FrequencyError("delta must be positive")
    n_max = _cap(freq, max(n_max if n_max is not None else freq.n_max, 3))
    if n_max < 2:
        return ThreeValued.inconclusive("fewer than two terms; no gaps to test")
    lam = materialize(freq, n_max)
    logc = _gap_scan_lc(lam, delta)
    ns = np.arange(1, len(logc) + 1)
    window = max(2, len(logc) // 10)
    tail = logc[-window:]
    empirical = {"min_log_C": float(np.min(logc)), "tail_min_log_C": float(np.min(tail)),
                 "delta": delta, "n_max": int(n_max)}

    fact = _lc_family_rule(freq, delta)
    if fact is not None:
        return replace(fact, witness=empirical)
    fail_rule = _lc_family_fails(freq, delta)
    if fail_rule is not None and float(np.max(tail)) < math.log(_FAILS_DECAY_THRESHOLD):
        wit = _trailing_witness(ns, np.exp(np.maximum(logc, -700.0)))
        wit.update(empirical)
        return ThreeValued.fails(fail_rule, wit)
    if fail_rule is not None:
        return ThreeValued.inconclusive(
            f"registered decay rule ({fail_rule}) not yet confirmed at this horizon", empirical
        )
    return ThreeValued.inconclusive("no registered family rule; empirical C only", empirical)


# ---------------------------------------------------------------------------
# basis decompositions lam = R * B


@dataclass(frozen=True)
class BasisElement:
    """One basis entry b_k.

    ``log_of`` marks the exact symbolic value log(log_of); ``exact`` marks an
    exact rational value.  Purely numeric entries carry only ``value``.
    """

    value: float
    log_of: Optional[int] = None
    exact: Optional[Fraction] = None

    def render(self) -> str:
        if self.log_of is not None:
            return f"log {self.log_of}"
        if self.exact is not None:
            return str(self.exact)
        return repr(self.value)


@dataclass(frozen=True)
class BohrDecomposition:
    """Exact decomposition lam_n = sum_k r_k^n b_k with finitely supported rational rows."""

    basis: tuple            # tuple[BasisElement, ...]
    rows: tuple             # tuple[dict[int, Fraction], ...] sparse, 0-based columns
    natural_type: bool
    freq: Optional[Frequency] = None

    def row_support(self, n: int):
        """0-based columns with nonzero entry in row n (1-based n)."""
        return sorted(self.rows[n - 1].keys())

    def dense_row(self, n: int, width: int | None = None):
        w = width if width is not None else len(self.basis)
        out = [Fraction(0)] * w
        for j, r in self.rows[n - 1].items():
            out[j] = r
        return out

    def reconstruct(self, n: int) -> float:
        """Float value of sum_k r_k^n b_k, fixed summation order."""
        return math.fsum(float(r) * self.basis[j].value for j, r in sorted(self.rows[n - 1].items()))


def _natural(rows) -> bool:
    return all(r.denominator == 1 and r >= 0 for row in rows for r in row.values())


def bohr_decomposition(freq: Frequency, n: int | None = None) -> BohrDecomposition:
    """Decompose the first terms of the frequency over an exact basis.

    Supported kinds: log_n and scaled_log_n (exponent vectors over log-primes),
    n (integer multiples of 1), log_prime (identity), rational_combination
    (echoes its own validated data).  Kinds without exact structure are
    rejected with UnsupportedKind; no basis search is attempted for
    unstructured reals.
    """
    n = _cap(freq, n if n is not None else freq.n_max)
    k = freq.kind
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N):
        scale = Fraction(1) if k is FrequencyKind.LOG_N else freq.c
        prime_index: dict = {}
        ordered: list = []
        rows = []
        for m in range(1, n + 1):
            row = {}
            for p, e in prime_exponents(m).items():
                if p not in prime_index:
                    prime_index[p] = len(ordered)
                    ordered.append(p)
                row[prime_index[p]] = scale * e
            rows.append(row)
        basis = tuple(BasisElement(value=math.log(p), log_of=p) for p in ordered)
        rows = tuple(rows)
        return BohrDecomposition(basis, rows, _natural(rows), freq)
    if k is FrequencyKind.N:
        basis = (BasisElement(value=1.0, exact=Fraction(1)),)
        rows = tuple({0: Fraction(m - 1)} if m > 1 else {} for m in range(1, n + 1))
        return BohrDecomposition(basis, rows, _natural(rows), freq)
    if k is FrequencyKind.LOG_PRIME:
        ps = primes(n)
        basis = tuple(BasisElement(value=math.log(int(p)), log_of=int(p)) for p in ps)
        rows = tuple({m: Fraction(1)} for m in range(n))
        return BohrDecomposition(basis, rows, True, freq)
    if k is FrequencyKind.RATIONAL_COMBINATION:
        if n > len(freq.matrix):
            raise OutOfRange(f"rational_combination has {len(freq.matrix)} rows, requested {n}")
        basis = tuple(BasisElement(value=b) for b in freq.basis)
        rows = tuple(
            {j: r for j, r in enumerate(row) if r != 0} for row in freq.matrix[:n]
        )
        _validate_increasing(_combination_values(freq.basis, freq.matrix[:n]))
        return BohrDecomposition(basis, rows, _natural(rows), freq)
    raise UnsupportedKind(
        f"no exact decomposition for kind '{k.value}': basis search over "
        "unstructured reals is out of scope"
    )


# ---------------------------------------------------------------------------
# derived classifications


def is_q_linearly_independent(freq: Frequency) -> Optional[ThreeValued]:
    """Registered/structural Q-linear-independence facts; None when unknown.

    Only family facts and exact rational structure count; no lattice
    heuristics are attempted for numeric inputs.
    """
    k = freq.kind
    if k is FrequencyKind.LOG_PRIME:
        return ThreeValued.holds("log-primes are Q-linearly independent by unique factorization")
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N):
        return ThreeValued.fails(
            "log 4 = 2 log 2 is a rational relation",
            {"relation": "lam(4) = 2 lam(2)"},
        )
    if k is FrequencyKind.N:
        return ThreeValued.fails(
            "the family contains 0 and the relation 2 = 2*1",
            {"relation": "lam(3) = 2 lam(2)"},
        )
    if k is FrequencyKind.RATIONAL_COMBINATION:
        dec = bohr_decomposition(freq)
        cols = [dec.row_support(m + 1) for m in range(len(dec.rows))]
        singleton = all(len(c) == 1 for c in cols)
        if singleton:
            flat = [c[0] for c in cols]
            units = all(next(iter(dec.rows[m].values())) == 1 for m in range(len(dec.rows)))
            if units and len(set(flat)) == len(flat):
                return ThreeValued.holds(
                    "identity-like matrix: the terms are distinct elements of the declared basis"
                )
        return None
    return None


def classify_bohr_theorem(freq: Frequency) -> ThreeValued:
    """Classify whether the uniform-convergence (Bohr) theorem is known to hold.

    Three testable routes: Q-linear independence, exact L = 0, or the Landau
    gap condition.  There is no computable refutation, so the verdict is never
    Fails.
    """
    qli = is_q_linearly_independent(freq)
    if qli is not None and qli.is_holds:
        return ThreeValued.holds(f"Q-linear independence: {qli.rule}")
    exact, rule = exact_strip_width(freq)
    if exact == 0.0:
        return ThreeValued.holds(f"L = 0 exactly ({rule})")
    lc = _lc_family_rule(freq, delta=0.5)
    lc_all = _lc_holds_for_all_delta(freq)
    if lc_all:
        return ThreeValued.holds(f"Landau gap condition: {lc.rule}" if lc else "Landau gap condition")
    return ThreeValued.inconclusive(
        "no testable route fired (Q-linear independence / L = 0 / Landau condition)"
    )


def _lc_holds_for_all_delta(freq: Frequency) -> bool:
    """Family-level Landau condition (the for-every-delta statement)."""
    return freq.kind in (
        FrequencyKind.LOG_N,
        FrequencyKind.SCALED_LOG_N,
        FrequencyKind.N,
        FrequencyKind.LOG_PRIME,
        FrequencyKind.LOG_N_POW,
    )


def check_hypercontractive(freq: Frequency) -> ThreeValued:
    """Is the translation semigroup bounded from H_p into H_q for all p <= q?

    Holds when L = 0 exactly, when Q-linear independence is established, or
    when the frequency has a natural-type decomposition with positive basis
    tending to infinity (a family-level fact for the log-prime-basis
    families).  Otherwise Inconclusive.
    """
    exact, rule = exact_strip_width(freq)
    if exact == 0.0:
        return ThreeValued.holds(f"L = 0 exactly ({rule})")
    qli = is_q_linearly_independent(freq)
    if qli is not None and qli.is_holds:
        return ThreeValued.holds(f"Q-linear independence: {qli.rule}")
    k = freq.kind
    if k in (FrequencyKind.LOG_N, FrequencyKind.SCALED_LOG_N) or (
        k is FrequencyKind.LOG_N_POW and freq.alpha == 1.0
    ):
        scale = freq.c if k is FrequencyKind.SCALED_LOG_N else Fraction(1)
        if scale.denominator == 1:
            return ThreeValued.holds(
                "natural-type decomposition over log-primes with basis log p_j -> infinity"
            )
        return ThreeValued.inconclusive(
            f"decomposition rows carry the non-integer factor {scale}; no rule applies"
        )
    if k is FrequencyKind.RATIONAL_COMBINATION:
        dec = bohr_decomposition(freq)
        if dec.natural_type and all(b.value > 0 for b in dec.basis):
            return ThreeValued.holds(
                "natural-type decomposition with positive (finite) basis"
            )
        return ThreeValued.inconclusive("declared decomposition is not of natural type")
    return ThreeValued.inconclusive("no rule applies to this kind")
