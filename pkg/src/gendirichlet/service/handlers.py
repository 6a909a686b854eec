"""Request handlers shared by the HTTP routes and the CLI.

Each handler takes a validated request model and returns a response model;
domain errors surface as ValueError subclasses for the callers to map onto
HTTP 422 or CLI exit code 2.
"""

from __future__ import annotations

import math

import numpy as np

from .. import report as report_mod
from ..frequency import (
    Frequency,
    FrequencyKind,
    bohr_decomposition,
    check_bohr_condition,
    check_hypercontractive,
    check_landau_condition,
    classify_bohr_theorem,
    estimate_L,
)
from ..koethe import KoetheMatrix, gp_nuclearity_test
from ..render import decomposition_rows, json_safe
from ..series import GridSpec, abschnitt, prefix, sup_norm_line, translate
from ..spaces import AbscissaParams, classical_abscissas
from ..summation import (
    KernelSpec,
    TrigPolynomial,
    bohr_coefficient,
    bohr_coefficient_error_bound,
    kernel_eval,
    kernel_ft,
    riesz_mean,
    uniform_abscissa_via_riesz,
)
from . import schemas as s

__all__ = [
    "analyze_frequency",
    "decompose_frequency",
    "abscissas",
    "translate_series",
    "abschnitt_series",
    "riesz",
    "kernels",
    "bohr_coeff",
    "koethe_block",
    "nuclearity",
    "structure_report",
]

_DEFAULT_BC_L = {
    FrequencyKind.LOG_N: 1.0,
    FrequencyKind.N: 1.0,
    FrequencyKind.LOG_PRIME: 1.0,
    FrequencyKind.LOG_N_POW: 1.0,
    FrequencyKind.LOG_LOG_N: 1.0,
}


def _default_l(freq: Frequency) -> float:
    if freq.kind is FrequencyKind.SCALED_LOG_N:
        return 1.0 / float(freq.c)
    return _DEFAULT_BC_L.get(freq.kind, 1.0)


def analyze_frequency(req: s.AnalyzeFrequencyRequest) -> s.FrequencyAnalysisOut:
    freq = req.frequency.to_core()
    l = req.l if req.l is not None else _default_l(freq)
    lc_delta = 0.5
    return s.FrequencyAnalysisOut(
        frequency=freq.label(),
        strip_width=s.AbscissaOut.from_core(estimate_L(freq, n_max=req.n_max)),
        bohr_condition=s.ThreeValuedOut.from_core(
            check_bohr_condition(freq, l, req.delta, n_max=req.n_max)),
        bohr_condition_l=l,
        bohr_condition_delta=req.delta,
        landau_condition=s.ThreeValuedOut.from_core(
            check_landau_condition(freq, lc_delta, n_max=req.n_max)),
        landau_condition_delta=lc_delta,
        bohr_theorem=s.ThreeValuedOut.from_core(classify_bohr_theorem(freq)),
        hypercontractive=s.ThreeValuedOut.from_core(check_hypercontractive(freq)),
    )


def decompose_frequency(req: s.DecomposeRequest) -> s.DecompositionOut:
    freq = req.frequency.to_core()
    dec = bohr_decomposition(freq, req.n)
    basis = [
        s.BasisElementOut(
            value=json_safe(b.value),
            log_of=b.log_of,
            exact=str(b.exact) if b.exact is not None else None,
            rendered=b.render(),
        )
        for b in dec.basis
    ]
    return s.DecompositionOut(
        frequency=freq.label(),
        basis=basis,
        rows=decomposition_rows(dec),
        natural_type=dec.natural_type,
    )


def abscissas(req: s.AbscissasRequest) -> s.ClassicalAbscissasOut:
    series = req.series.to_core()
    params = AbscissaParams(
        n_max=req.n_max,
        x_count=req.x_count,
        window=req.window,
        sup_horizon=req.sup_horizon,
        grid=GridSpec(t_max=req.grid_t_max, step=req.grid_step),
    )
    out = classical_abscissas(series, params)
    return s.ClassicalAbscissasOut(
        label=series.label or series.freq.label(),
        sigma_c=s.AbscissaOut.from_core(out["sigma_c"], include_scan=True),
        sigma_a=s.AbscissaOut.from_core(out["sigma_a"], include_scan=True),
        sigma_b_proxy=s.AbscissaOut.from_core(out["sigma_b_proxy"], include_scan=True),
        sigma_u_proxy=s.AbscissaOut.from_core(out["sigma_u_proxy"], include_scan=True),
    )


def _terms_out(lam, coeffs, label: str) -> s.TermsOut:
    terms = [
        s.TermOut(frequency=json_safe(l), re=json_safe(c.real), im=json_safe(c.imag))
        for l, c in zip(lam, coeffs)
    ]
    return s.TermsOut(label=label, terms=terms)


def translate_series(req: s.TranslateRequest) -> s.TermsOut:
    series = translate(req.series.to_core(), req.sigma)
    count = req.count
    if series.freq.length is not None:
        count = min(count, series.freq.length)
    lam, coeffs = prefix(series, count)
    return _terms_out(lam, coeffs, series.label or series.freq.label())


def abschnitt_series(req: s.AbschnittRequest) -> s.TermsOut:
    series = req.series.to_core()
    horizon = req.horizon
    if series.freq.length is not None:
        horizon = min(horizon, series.freq.length)
    dec = bohr_decomposition(series.freq, horizon)
    poly = abschnitt(series, dec, req.n_basis, horizon)
    return _terms_out(poly.lambdas, poly.coefficients,
                      f"{series.label or series.freq.label()} | first {req.n_basis} basis columns")


def riesz(req: s.RieszRequest) -> s.RieszOut:
    series = req.series.to_core()
    label = series.label or series.freq.label()
    if req.x_points:
        grid = GridSpec(t_max=req.grid_t_max, step=req.grid_step)
        xs = [float(x) for x in req.x_points]
        rows = []
        for x in xs:
            v = sup_norm_line(riesz_mean(series, x), 0.0, grid)
            rows.append(s.RieszScanRow(
                x=json_safe(x),
                sup_norm=json_safe(v),
                log_over_x=json_safe(math.log(v) / x if v > 0 else -math.inf),
            ))
        est = uniform_abscissa_via_riesz(series, np.asarray(xs), grid)
        return s.RieszOut(label=label, scan=rows, estimate=s.AbscissaOut.from_core(est))
    if req.x is None:
        raise ValueError("riesz requires either 'x' or 'x_points'")
    poly = riesz_mean(series, req.x)
    value = poly.evaluate(complex(req.s[0], req.s[1]))
    terms = _terms_out(poly.lambdas, poly.coefficients, label)
    return s.RieszOut(label=label, terms=terms.terms,
                      value=(json_safe(value.real), json_safe(value.imag)))


def kernels(req: s.KernelRequest) -> s.KernelOut:
    if req.kind == "fejer":
        if req.x is None:
            raise ValueError("fejer kernel requires 'x'")
        spec = KernelSpec.fejer(req.x)
    else:
        if req.sigma is None:
            raise ValueError("poisson kernel requires 'sigma'")
        spec = KernelSpec.poisson(req.sigma)
    fn = kernel_ft if req.transform else kernel_eval
    points = [
        s.KernelPointOut(t=json_safe(t), value=json_safe(fn(spec, t))) for t in req.t
    ]
    return s.KernelOut(kind=req.kind, parameter=json_safe(spec.param),
                       transform=req.transform, points=points)


def bohr_coeff(req: s.BohrCoeffRequest) -> s.BohrCoeffOut:
    poly = TrigPolynomial.from_pairs(
        (freq, complex(re, im)) for freq, re, im in req.terms
    )
    value = bohr_coefficient(poly, req.sigma, req.x, req.T)
    bound = bohr_coefficient_error_bound(poly, req.sigma, req.x, req.T)
    return s.BohrCoeffOut(
        value=(json_safe(value.real), json_safe(value.imag)),
        error_bound=json_safe(bound),
        sigma=json_safe(req.sigma), x=json_safe(req.x), T=json_safe(req.T),
    )


def koethe_block(req: s.KoetheMatrixRequest) -> s.KoetheBlockOut:
    freq = req.frequency.to_core()
    n_max = req.n_max if freq.length is None else min(req.n_max, freq.length)
    block = KoetheMatrix(freq).block(n_max, req.k_max)
    entries = [
        s.KoetheEntryOut(n=n + 1, k=k + 1, entry=json_safe(block[n, k]))
        for n in range(block.shape[0])
        for k in range(block.shape[1])
    ]
    return s.KoetheBlockOut(frequency=freq.label(), entries=entries)


def nuclearity(req: s.NuclearityRequest) -> s.ThreeValuedOut:
    freq = req.frequency.to_core()
    return s.ThreeValuedOut.from_core(
        gp_nuclearity_test(freq, k_max=req.k_max, n_max=req.n_max)
    )


def structure_report(req: s.ReportRequest) -> s.ReportOut:
    freq = req.frequency.to_core()
    rep = report_mod.build_report(freq)
    spaces = [
        s.SpaceVerdictsOut(
            space=sv.space,
            flags={name: s.ThreeValuedOut.from_core(tv) for name, tv in sv.flags().items()},
        )
        for sv in rep.spaces
    ]
    return s.ReportOut(
        frequency=rep.frequency,
        strip_width=json_safe(rep.strip_width) if rep.strip_width is not None else None,
        bohr_theorem=s.ThreeValuedOut.from_core(rep.bohr_theorem),
        spaces=spaces,
    )
