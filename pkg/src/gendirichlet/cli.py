"""Batch command-line front end.

The CLI is a thin client over the service layer: every subcommand builds the
same pydantic request model the HTTP endpoint accepts, calls the same
handler in-process, and renders the response as text, JSON, or CSV.

Exit codes: 0 success, 2 input validation error (malformed JSON reports line
and column), 3 when --strict is set and any verdict is inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from . import __version__
from .render import fmt12, gp_table_csv, kernel_profile_csv
from .service import handlers
from .service import schemas as s

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


class CliError(Exception):
    """Input validation failure; message is printed and exit code 2 returned."""


def _load_json(text: str, what: str):
    """Parse inline JSON; a leading '@' reads the JSON from a file."""
    if text.startswith("@"):
        path = Path(text[1:])
        if not path.exists():
            raise CliError(f"{what}: file not found: {path}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(
            f"{what}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _freq_in(raw: str) -> s.FrequencyIn:
    data = _load_json(raw, "--freq")
    try:
        return s.FrequencyIn(**data)
    except (ValidationError, TypeError) as exc:
        raise CliError(f"--freq: {exc}") from exc


def _series_in(raw: str) -> s.SeriesIn:
    data = _load_json(raw, "--series")
    try:
        return s.SeriesIn(**data)
    except (ValidationError, TypeError) as exc:
        raise CliError(f"--series: {exc}") from exc


def _has_inconclusive(obj) -> bool:
    if isinstance(obj, dict):
        if obj.get("verdict") == "inconclusive":
            return True
        return any(_has_inconclusive(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_has_inconclusive(v) for v in obj)
    return False


def _tv_line(name: str, tv: s.ThreeValuedOut) -> str:
    rule = f" -- {tv.rule}" if tv.rule else ""
    return f"{name}: {tv.verdict}{rule}"


def _abscissa_line(name: str, a: s.AbscissaOut) -> str:
    extra = ""
    if a.estimate is not None and a.exact is not None:
        extra = f" (numeric estimate {a.estimate})"
    return f"{name}: {a.claim}{extra} [{a.confidence.verdict}]"


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_analyze_frequency(args) -> tuple:
    req = s.AnalyzeFrequencyRequest(
        frequency=_freq_in(args.freq), l=args.l, delta=args.delta, n_max=args.n_max)
    out = handlers.analyze_frequency(req)
    text = "\n".join([
        f"frequency: {out.frequency}",
        _abscissa_line("L", out.strip_width),
        _tv_line(f"Bohr gap condition (l={fmt12(out.bohr_condition_l)}, "
                 f"delta={fmt12(out.bohr_condition_delta)})", out.bohr_condition),
        _tv_line(f"Landau gap condition (delta={fmt12(out.landau_condition_delta)})",
                 out.landau_condition),
        _tv_line("Bohr theorem", out.bohr_theorem),
        _tv_line("hypercontractive", out.hypercontractive),
    ])
    return out, text, None


def _cmd_abscissas(args) -> tuple:
    req = s.AbscissasRequest(
        series=_series_in(args.series), n_max=args.n_max, x_count=args.x_count,
        window=args.window, sup_horizon=args.sup_horizon,
        grid_t_max=args.t_max, grid_step=args.step)
    out = handlers.abscissas(req)
    text = "\n".join([
        f"series: {out.label}",
        _abscissa_line("sigma_c", out.sigma_c),
        _abscissa_line("sigma_a", out.sigma_a),
        _abscissa_line("sigma_b (proxy)", out.sigma_b_proxy),
        _abscissa_line("sigma_u (proxy)", out.sigma_u_proxy),
    ])

    def to_csv() -> str:
        parts = []
        for name in ("sigma_c", "sigma_a", "sigma_b_proxy", "sigma_u_proxy"):
            est = getattr(out, name)
            rows = est.scan or []
            header = "" if parts else "x,lognorm_over_x,space_kind,k\n"
            body = "".join(
                f"{fmt12(float(x)) if not isinstance(x, str) else x},"
                f"{fmt12(float(v)) if not isinstance(v, str) else v},{name},\n"
                for x, v in rows
            )
            parts.append(header + body)
        return "".join(parts)

    return out, text, to_csv


def _cmd_translate(args) -> tuple:
    req = s.TranslateRequest(series=_series_in(args.series), sigma=args.sigma,
                             count=args.count)
    out = handlers.translate_series(req)
    lines = [f"series: {out.label}"] + [
        f"lambda={t.frequency}  a={t.re}{'+' if float(t.im) >= 0 else ''}{t.im}i"
        for t in out.terms
    ]
    return out, "\n".join(lines), None


def _cmd_abschnitt(args) -> tuple:
    req = s.AbschnittRequest(series=_series_in(args.series), n_basis=args.n_basis,
                             horizon=args.horizon)
    out = handlers.abschnitt_series(req)
    lines = [f"series: {out.label}", f"kept terms: {len(out.terms)}"] + [
        f"lambda={t.frequency}  a={t.re}{'+' if float(t.im) >= 0 else ''}{t.im}i"
        for t in out.terms
    ]
    return out, "\n".join(lines), None


def _cmd_riesz(args) -> tuple:
    x_points = [float(v) for v in args.scan.split(",")] if args.scan else None
    req = s.RieszRequest(
        series=_series_in(args.series), x=args.x, s=(args.s_re, args.s_im),
        x_points=x_points, grid_t_max=args.t_max, grid_step=args.step)
    out = handlers.riesz(req)
    if out.scan is not None:
        lines = [f"series: {out.label}"]
        lines += [f"x={r.x}  sup_norm={r.sup_norm}  log/x={r.log_over_x}" for r in out.scan]
        if out.estimate:
            lines.append(_abscissa_line("uniform abscissa (upper-bound estimate)", out.estimate))

        def to_csv() -> str:
            return "x,sup_norm,log_over_x\n" + "".join(
                f"{r.x},{r.sup_norm},{r.log_over_x}\n" for r in out.scan
            )

        return out, "\n".join(lines), to_csv
    lines = [f"series: {out.label}", f"terms: {len(out.terms or [])}"]
    lines += [
        f"lambda={t.frequency}  a={t.re}{'+' if float(t.im) >= 0 else ''}{t.im}i"
        for t in out.terms or []
    ]
    if out.value is not None:
        lines.append(f"value at s: {out.value[0]}+{out.value[1]}i")
    return out, "\n".join(lines), None


def _cmd_kernels(args) -> tuple:
    ts = [float(v) for v in args.t.split(",")] if args.t else [0.0]
    req = s.KernelRequest(kind=args.kind, x=args.x, sigma=args.sigma, t=ts,
                          transform=args.ft)
    out = handlers.kernels(req)
    name = f"{out.kind}{'_ft' if out.transform else ''}"
    lines = [f"{name}(param={out.parameter}, t={p.t}) = {p.value}" for p in out.points]

    def to_csv() -> str:
        if args.kind == "fejer":
            x, sigma = float(out.parameter), args.sigma or 1.0
        else:
            x, sigma = args.x or 1.0, float(out.parameter)
        return kernel_profile_csv(ts, x, sigma)

    return out, "\n".join(lines), to_csv


def _cmd_bohr_coeff(args) -> tuple:
    terms = _load_json(args.terms, "--terms")
    try:
        req = s.BohrCoeffRequest(terms=terms, sigma=args.sigma, x=args.x, T=args.T)
    except ValidationError as exc:
        raise CliError(f"--terms: {exc}") from exc
    out = handlers.bohr_coeff(req)
    text = (
        f"coefficient at frequency {out.x} (sigma={out.sigma}, T={out.T}): "
        f"{out.value[0]}+{out.value[1]}i  (off-frequency leakage bound {out.error_bound})"
    )
    return out, text, None


def _cmd_koethe(args) -> tuple:
    req = s.KoetheMatrixRequest(frequency=_freq_in(args.freq), n_max=args.n_max,
                                k_max=args.k_max)
    out = handlers.koethe_block(req)
    lines = [f"frequency: {out.frequency}"] + [
        f"a[n={e.n}, k={e.k}] = {e.entry}" for e in out.entries
    ]

    def to_csv() -> str:
        body = "".join(f"{e.n},{e.k},{e.entry}\n" for e in out.entries)
        return "n,k,entry\n" + body

    return out, "\n".join(lines), to_csv


def _cmd_nuclearity(args) -> tuple:
    req = s.NuclearityRequest(frequency=_freq_in(args.freq), k_max=args.k_max,
                              n_max=args.n_max)
    out = handlers.nuclearity(req)
    text = _tv_line("nuclear (echelon-space summability test)", out)

    def to_csv() -> str:
        per_k = (out.witness or {}).get("per_k", {})
        return gp_table_csv({int(k): v for k, v in per_k.items()})

    return out, text, to_csv


def _cmd_report(args) -> tuple:
    req = s.ReportRequest(frequency=_freq_in(args.freq))
    out = handlers.structure_report(req)
    lines = [
        f"frequency: {out.frequency}",
        f"strip width L: {out.strip_width if out.strip_width is not None else 'not exact'}",
        _tv_line("Bohr theorem", out.bohr_theorem),
    ]
    for sp in out.spaces:
        lines.append(f"[{sp.space}]")
        for flag, tv in sp.flags.items():
            lines.append("  " + _tv_line(flag, tv))
    return out, "\n".join(lines), None


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gendirichlet",
        description="Structure theory of general Dirichlet series, batch interface.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", help="write output to this path instead of stdout")
        p.add_argument("--strict", action="store_true",
                       help="exit with code 3 when any verdict is inconclusive")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized demos (reserved; analyses are deterministic)")

    p = sub.add_parser("analyze-frequency", help="L, gap conditions, Bohr theorem, hypercontractivity")
    p.add_argument("--freq", required=True, help="frequency JSON (or @file)")
    p.add_argument("--l", type=float, default=None)
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_analyze_frequency)

    p = sub.add_parser("abscissas", help="classical abscissa estimates for a series")
    p.add_argument("--series", required=True, help="series JSON (or @file)")
    p.add_argument("--n-max", dest="n_max", type=int, default=100_000)
    p.add_argument("--x-count", dest="x_count", type=int, default=64)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--sup-horizon", dest="sup_horizon", type=int, default=800)
    p.add_argument("--t-max", dest="t_max", type=float, default=40.0)
    p.add_argument("--step", type=float, default=0.05)
    common(p)
    p.set_defaults(fn=_cmd_abscissas)

    p = sub.add_parser("translate", help="translated coefficients a_n e^(-lam_n sigma)")
    p.add_argument("--series", required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--count", type=int, default=16)
    common(p)
    p.set_defaults(fn=_cmd_translate)

    p = sub.add_parser("abschnitt", help="restrict a series to the first N basis columns")
    p.add_argument("--series", required=True)
    p.add_argument("--n-basis", dest="n_basis", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_abschnitt)

    p = sub.add_parser("riesz", help="Riesz mean terms/value, or a sup-norm scan")
    p.add_argument("--series", required=True)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--s-re", dest="s_re", type=float, default=0.0)
    p.add_argument("--s-im", dest="s_im", type=float, default=0.0)
    p.add_argument("--scan", help="comma-separated x values for the scan mode")
    p.add_argument("--t-max", dest="t_max", type=float, default=40.0)
    p.add_argument("--step", type=float, default=0.05)
    common(p)
    p.set_defaults(fn=_cmd_riesz)

    p = sub.add_parser("kernels", help="kernel values and Fourier transforms")
    p.add_argument("--kind", choices=("fejer", "poisson"), required=True)
    p.add_argument("--x", type=float, default=None, help="fejer parameter")
    p.add_argument("--sigma", type=float, default=None, help="poisson parameter")
    p.add_argument("--t", default="0", help="comma-separated evaluation points")
    p.add_argument("--ft", action="store_true", help="evaluate the Fourier transform")
    common(p)
    p.set_defaults(fn=_cmd_kernels)

    p = sub.add_parser("bohr-coeff", help="Bohr coefficient by exact finite-T time average")
    p.add_argument("--terms", required=True,
                   help='JSON [[frequency, re, im], ...] (or @file)')
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--T", type=float, default=1e4)
    common(p)
    p.set_defaults(fn=_cmd_bohr_coeff)

    p = sub.add_parser("koethe", help="materialize a weight-matrix block")
    p.add_argument("--freq", required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=16)
    p.add_argument("--k-max", dest="k_max", type=int, default=8)
    common(p)
    p.set_defaults(fn=_cmd_koethe)

    p = sub.add_parser("nuclearity", help="echelon-space nuclearity test")
    p.add_argument("--freq", required=True)
    p.add_argument("--k-max", dest="k_max", type=int, default=6)
    p.add_argument("--n-max", dest="n_max", type=int, default=20_000)
    common(p)
    p.set_defaults(fn=_cmd_nuclearity)

    p = sub.add_parser("report", help="structural verdicts for the attached spaces")
    p.add_argument("--freq", required=True)
    common(p)
    p.set_defaults(fn=_cmd_report)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        model, text, to_csv = args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "json":
        rendered = json.dumps(model.model_dump(), indent=2, allow_nan=False)
    elif args.format == "csv":
        if to_csv is None:
            print(f"error: no CSV rendering for '{args.command}'", file=sys.stderr)
            return EXIT_INPUT
        rendered = to_csv()
    else:
        rendered = text

    if args.output:
        Path(args.output).write_text(rendered + ("" if rendered.endswith("\n") else "\n"))
    else:
        print(rendered)

    if args.strict and _has_inconclusive(model.model_dump()):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
