"""HTTP surface: one POST endpoint per analysis, pydantic in and out.

Run with: uvicorn gendirichlet.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import handlers
from . import schemas as s


def create_app() -> FastAPI:
    api = FastAPI(
        title="gendirichlet",
        description=(
            "Computable structure theory of general Dirichlet series: "
            "abscissas, gap conditions, kernel summation, weighted echelon "
            "norms, and structural space reports."
        ),
        version=__version__,
    )

    def run(handler, req):
        try:
            return handler(req)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @api.get("/health", response_model=s.HealthOut)
    def health() -> s.HealthOut:
        return s.HealthOut(status="ok", version=__version__)

    @api.post("/frequency/analyze", response_model=s.FrequencyAnalysisOut)
    def analyze_frequency(req: s.AnalyzeFrequencyRequest) -> s.FrequencyAnalysisOut:
        return run(handlers.analyze_frequency, req)

    @api.post("/frequency/decompose", response_model=s.DecompositionOut)
    def decompose(req: s.DecomposeRequest) -> s.DecompositionOut:
        return run(handlers.decompose_frequency, req)

    @api.post("/series/abscissas", response_model=s.ClassicalAbscissasOut)
    def abscissas(req: s.AbscissasRequest) -> s.ClassicalAbscissasOut:
        return run(handlers.abscissas, req)

    @api.post("/series/translate", response_model=s.TermsOut)
    def translate(req: s.TranslateRequest) -> s.TermsOut:
        return run(handlers.translate_series, req)

    @api.post("/series/abschnitt", response_model=s.TermsOut)
    def abschnitt(req: s.AbschnittRequest) -> s.TermsOut:
        return run(handlers.abschnitt_series, req)

    @api.post("/summation/riesz", response_model=s.RieszOut)
    def riesz(req: s.RieszRequest) -> s.RieszOut:
        return run(handlers.riesz, req)

    @api.post("/summation/kernels", response_model=s.KernelOut)
    def kernels(req: s.KernelRequest) -> s.KernelOut:
        return run(handlers.kernels, req)

    @api.post("/summation/bohr-coeff", response_model=s.BohrCoeffOut)
    def bohr_coeff(req: s.BohrCoeffRequest) -> s.BohrCoeffOut:
        return run(handlers.bohr_coeff, req)

    @api.post("/koethe/matrix", response_model=s.KoetheBlockOut)
    def koethe_matrix(req: s.KoetheMatrixRequest) -> s.KoetheBlockOut:
        return run(handlers.koethe_block, req)

    @api.post("/koethe/nuclearity", response_model=s.ThreeValuedOut)
    def nuclearity(req: s.NuclearityRequest) -> s.ThreeValuedOut:
        return run(handlers.nuclearity, req)

    @api.post("/report", response_model=s.ReportOut)
    def report(req: s.ReportRequest) -> s.ReportOut:
        return run(handlers.structure_report, req)

    return api


app = create_app()
