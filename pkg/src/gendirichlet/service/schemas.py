"""Pydantic request/response models for the HTTP service.

The request models mirror the JSON schemas of the library's external
interfaces (frequency and series descriptions); the response models are
JSON-safe projections of the core result objects, with floats rounded to 12
significant digits and infinities rendered as strings.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field

from ..frequency import (
    AbscissaEstimate,
    Frequency,
    FrequencyError,
    ThreeValued,
)
from ..render import json_safe
from ..series import CoefficientSource, DirichletSeries

Number = Union[float, str]  # floats; "inf" / "-inf" sentinels in JSON


# ---------------------------------------------------------------------------
# inputs


class FrequencyIn(BaseModel):
    """JSON form of a frequency.

    kinds: log_n | n | log_n_pow | log_prime | scaled_log_n | log_log_n |
    explicit | rational_combination.  ``c`` and matrix entries are rational
    [numerator, denominator] pairs.
    """

    kind: str
    alpha: Optional[float] = None
    c: Optional[tuple[int, int]] = None
    values: Optional[list[float]] = None
    basis: Optional[list[float]] = None
    matrix: Optional[list[list[tuple[int, int]]]] = None
    n_max: int = Field(default=10_000, gt=0)

    def to_core(self) -> Frequency:
        k = self.kind
        if k == "log_n":
            return Frequency.log_n(self.n_max)
        if k == "n":
            return Frequency.naturals(self.n_max)
        if k == "log_n_pow":
            if self.alpha is None:
                raise FrequencyError("log_n_pow requires 'alpha'")
            return Frequency.log_n_pow(self.alpha, self.n_max)
        if k == "log_prime":
            return Frequency.log_prime(self.n_max)
        if k == "scaled_log_n":
            if self.c is None:
                raise FrequencyError("scaled_log_n requires 'c' as [numerator, denominator]")
            return Frequency.scaled_log_n(Fraction(self.c[0], self.c[1]), self.n_max)
        if k == "log_log_n":
            return Frequency.log_log_n(self.n_max)
        if k == "explicit":
            if not self.values:
                raise FrequencyError("explicit requires nonempty 'values'")
            return Frequency.explicit(self.values)
        if k == "rational_combination":
            if self.basis is None or self.matrix is None:
                raise FrequencyError("rational_combination requires 'basis' and 'matrix'")
            rows = [[Fraction(num, den) for num, den in row] for row in self.matrix]
            return Frequency.rational_combination(self.basis, rows)
        raise FrequencyError(f"unknown frequency kind '{k}'")


class CoefficientsIn(BaseModel):
    kind: Literal["explicit", "ones", "alternating", "power"]
    values: Optional[list[tuple[float, float]]] = None
    beta: Optional[float] = None

    def to_core(self) -> CoefficientSource:
        if self.kind == "explicit":
            if self.values is None:
                raise ValueError("explicit coefficients require 'values' as [re, im] pairs")
            return CoefficientSource.explicit([complex(re, im) for re, im in self.values])
        if self.kind == "ones":
            return CoefficientSource.ones()
        if self.kind == "alternating":
            return CoefficientSource.alternating()
        if self.beta is None:
            raise ValueError("power coefficients require 'beta'")
        return CoefficientSource.power(self.beta)


class SeriesIn(BaseModel):
    frequency: FrequencyIn
    coefficients: CoefficientsIn
    label: str = ""

    def to_core(self) -> DirichletSeries:
        return DirichletSeries(
            freq=self.frequency.to_core(),
            coeffs=self.coefficients.to_core(),
            label=self.label,
        )


class AnalyzeFrequencyRequest(BaseModel):
    frequency: FrequencyIn
    l: Optional[float] = None          # default: registered family value, else 1
    delta: float = Field(default=0.01, gt=0)
    n_max: Optional[int] = Field(default=None, gt=0)


class DecomposeRequest(BaseModel):
    frequency: FrequencyIn
    n: Optional[int] = Field(default=None, gt=0)


class AbscissasRequest(BaseModel):
    series: SeriesIn
    n_max: int = Field(default=100_000, gt=1)
    x_count: int = Field(default=64, gt=1)
    window: int = Field(default=8, gt=0)
    sup_horizon: int = Field(default=800, gt=1)
    grid_t_max: float = Field(default=40.0, gt=0)
    grid_step: float = Field(default=0.05, gt=0)


class TranslateRequest(BaseModel):
    series: SeriesIn
    sigma: float
    count: int = Field(default=16, gt=0)


class AbschnittRequest(BaseModel):
    series: SeriesIn
    n_basis: int = Field(gt=0)
    horizon: int = Field(gt=0)


class RieszRequest(BaseModel):
    series: SeriesIn
    x: Optional[float] = Field(default=None, gt=0)
    s: tuple[float, float] = (0.0, 0.0)
    x_points: Optional[list[float]] = None
    grid_t_max: float = Field(default=40.0, gt=0)
    grid_step: float = Field(default=0.05, gt=0)


class KernelRequest(BaseModel):
    kind: Literal["fejer", "poisson"]
    x: Optional[float] = Field(default=None, gt=0)
    sigma: Optional[float] = Field(default=None, gt=0)
    t: list[float] = Field(default_factory=lambda: [0.0])
    transform: bool = False


class BohrCoeffRequest(BaseModel):
    terms: list[tuple[float, float, float]]  # (frequency, re, im)
    sigma: float = 0.5
    x: float = 0.0
    T: float = Field(default=1e4, gt=0)


class KoetheMatrixRequest(BaseModel):
    frequency: FrequencyIn
    n_max: int = Field(default=16, gt=0)
    k_max: int = Field(default=8, gt=0)


class NuclearityRequest(BaseModel):
    frequency: FrequencyIn
    k_max: int = Field(default=6, gt=0)
    n_max: int = Field(default=20_000, gt=1)


class ReportRequest(BaseModel):
    frequency: FrequencyIn


# ---------------------------------------------------------------------------
# outputs


class ThreeValuedOut(BaseModel):
    verdict: str
    rule: Optional[str] = None
    witness: Optional[Any] = None

    @staticmethod
    def from_core(tv: ThreeValued) -> "ThreeValuedOut":
        return ThreeValuedOut(
            verdict=tv.verdict.value,
            rule=tv.rule,
            witness=json_safe(tv.witness) if tv.witness is not None else None,
        )


class AbscissaOut(BaseModel):
    value: Number
    claim: str
    exact: Optional[Number] = None
    estimate: Optional[Number] = None
    clamped: bool = False
    confidence: ThreeValuedOut
    scan: Optional[list[tuple[Number, Number]]] = None

    @staticmethod
    def from_core(est: AbscissaEstimate, include_scan: bool = False) -> "AbscissaOut":
        if est.value == -math.inf:
            claim = "-infinity (finite or eventually-zero truncations)"
        elif est.clamped:
            claim = "<= 0, exact value unknown"
        elif est.exact is not None:
            claim = f"= {json_safe(est.exact)} (exact)"
        else:
            claim = f"~ {json_safe(est.value)} (trailing-window estimate)"
        return AbscissaOut(
            value=json_safe(est.value),
            claim=claim,
            exact=json_safe(est.exact) if est.exact is not None else None,
            estimate=json_safe(est.estimate) if est.estimate is not None else None,
            clamped=est.clamped,
            confidence=ThreeValuedOut.from_core(est.confidence),
            scan=json_safe(list(est.scan)) if include_scan and est.scan else None,
        )


class FrequencyAnalysisOut(BaseModel):
    frequency: str
    strip_width: AbscissaOut
    bohr_condition: ThreeValuedOut
    bohr_condition_l: float
    bohr_condition_delta: float
    landau_condition: ThreeValuedOut
    landau_condition_delta: float
    bohr_theorem: ThreeValuedOut
    hypercontractive: ThreeValuedOut


class BasisElementOut(BaseModel):
    value: Number
    log_of: Optional[int] = None
    exact: Optional[str] = None
    rendered: str


class DecompositionOut(BaseModel):
    frequency: str
    basis: list[BasisElementOut]
    rows: list[list[dict]]
    natural_type: bool


class ClassicalAbscissasOut(BaseModel):
    label: str
    sigma_c: AbscissaOut
    sigma_a: AbscissaOut
    sigma_b_proxy: AbscissaOut
    sigma_u_proxy: AbscissaOut


class TermOut(BaseModel):
    frequency: Number
    re: Number
    im: Number


class TermsOut(BaseModel):
    label: str
    terms: list[TermOut]


class RieszScanRow(BaseModel):
    x: Number
    sup_norm: Number
    log_over_x: Number


class RieszOut(BaseModel):
    label: str
    terms: Optional[list[TermOut]] = None
    value: Optional[tuple[Number, Number]] = None
    scan: Optional[list[RieszScanRow]] = None
    estimate: Optional[AbscissaOut] = None


class KernelPointOut(BaseModel):
    t: Number
    value: Number


class KernelOut(BaseModel):
    kind: str
    parameter: Number
    transform: bool
    points: list[KernelPointOut]


class BohrCoeffOut(BaseModel):
    value: tuple[Number, Number]
    error_bound: Number
    sigma: Number
    x: Number
    T: Number


class KoetheEntryOut(BaseModel):
    n: int
    k: int
    entry: Number


class KoetheBlockOut(BaseModel):
    frequency: str
    entries: list[KoetheEntryOut]


class SpaceVerdictsOut(BaseModel):
    space: str
    flags: dict[str, ThreeValuedOut]


class ReportOut(BaseModel):
    frequency: str
    strip_width: Optional[Number] = None
    bohr_theorem: ThreeValuedOut
    spaces: list[SpaceVerdictsOut]


class HealthOut(BaseModel):
    status: str
    version: str
