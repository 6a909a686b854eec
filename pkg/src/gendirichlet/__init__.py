"""Computable structure theory of general Dirichlet series.

Core objects: frequencies and their gap/width diagnostics, Dirichlet series
and polynomials, admissible coefficient-space norms with Bohr-Cahen abscissa
scans, smoothing-kernel summation with dual-route identities, exponential
weight matrices with a nuclearity test, and aggregated structure reports.
"""

__version__ = "0.1.0"

from .frequency import (
    AbscissaEstimate,
    BasisElement,
    BohrDecomposition,
    Degenerate,
    Frequency,
    FrequencyError,
    FrequencyKind,
    NonMonotone,
    OutOfRange,
    ThreeValued,
    UnsupportedKind,
    Verdict,
    bohr_decomposition,
    check_bohr_condition,
    check_hypercontractive,
    check_landau_condition,
    classify_bohr_theorem,
    estimate_L,
    materialize,
)
from .koethe import KoetheMatrix, gp_nuclearity_test, koethe_entry, projective_seminorm, weighted_norm
from .report import StructureReport, build_report, hardy2_coincidence_demo
from .series import (
    CoefficientSource,
    DirichletPolynomial,
    DirichletSeries,
    GridSpec,
    MismatchedDecomposition,
    abschnitt,
    partial_sum,
    sup_norm_line,
    translate,
    truncate_below,
)
from .spaces import (
    AbscissaParams,
    AdmissibleSpace,
    EmptyScan,
    bohr_cahen_abscissa,
    classical_abscissas,
    norm,
    seminorm_ladder,
)
from .summation import (
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
    uniform_abscissa_via_riesz,
)

__all__ = [name for name in dir() if not name.startswith("_")]
