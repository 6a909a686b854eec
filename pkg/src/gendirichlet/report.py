"""Structural verdicts for the Frechet spaces attached to a frequency.

Everything here is inference over previously computed three-valued facts:
whether the uniform-convergence (Bohr) theorem is known to hold, whether the
strip width L is exactly zero, and whether the translation semigroup is
hypercontractive.  Theorems are applied as one-directional rules -- the
"only if" directions are used solely to propagate Fails from exact facts --
and an Inconclusive premise is never upgraded to a definite verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .frequency import (
    Frequency,
    ThreeValued,
    check_hypercontractive,
    classify_bohr_theorem,
    estimate_L,
)
from .koethe import KoetheMatrix, weighted_norm
from .series import CoefficientSource, DirichletSeries
from .spaces import AdmissibleSpace, seminorm_ladder

__all__ = ["SpaceVerdicts", "StructureReport", "build_report", "hardy2_coincidence_demo"]


@dataclass(frozen=True)
class SpaceVerdicts:
    """Flags for one space; every flag is a ThreeValued carrying its rule."""

    space: str
    is_frechet: ThreeValued
    is_barrelled: ThreeValued
    is_montel: ThreeValued
    is_schwartz: ThreeValued
    monomial_basis: ThreeValued
    is_nuclear: ThreeValued
    coincides_with_hardy: ThreeValued
    hypercontractive: ThreeValued

    def flags(self) -> dict:
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if f.name != "space"
        }


@dataclass(frozen=True)
class StructureReport:
    frequency: str
    strip_width: float | None      # exact L when registered
    bohr_theorem: ThreeValued
    spaces: tuple                  # tuple[SpaceVerdicts, ...]

    def space(self, name: str) -> SpaceVerdicts:
        for s in self.spaces:
            if s.space == name:
                return s
        raise KeyError(name)

    def check_invariants(self) -> None:
        """Raise AssertionError if any structural consistency rule is violated."""
        d = self.space("D_inf_plus")
        assert d.is_frechet.verdict == d.is_barrelled.verdict == d.is_montel.verdict, (
            "completeness, barrelledness and the Montel property must coincide "
            "for the bounded-series space"
        )
        for s in self.spaces:
            if s.is_nuclear.is_holds:
                assert s.is_frechet.is_holds, (
                    f"{s.space}: nuclear Holds requires Frechet Holds"
                )
            assert s.is_schwartz.is_holds, f"{s.space}: Schwartz must hold unconditionally"
        assert not self.bohr_theorem.is_fails, "the Bohr-theorem verdict is never Fails"


def _gate(premise: ThreeValued, rule: str) -> ThreeValued:
    """Holds if the premise holds; otherwise Inconclusive (premises never Fail here)."""
    if premise.is_holds:
        return ThreeValued.holds(rule)
    return ThreeValued.inconclusive(f"{rule}; premise is {premise.verdict.value}")


def _l_zero_fact(freq: Frequency) -> ThreeValued:
    est = estimate_L(freq, n_max=min(freq.n_max, 20_000))
    if est.exact is None:
        return ThreeValued.inconclusive(
            "no exact strip width registered for this frequency"
        )
    if est.exact == 0.0:
        return ThreeValued.holds("strip width L = 0 exactly")
    return ThreeValued.fails(
        f"strip width L = {est.exact:g} > 0 exactly", {"L": est.exact}
    )


def _nuclear_via_conjunction(l0: ThreeValued, bohr: ThreeValued) -> ThreeValued:
    """For the endpoint Hardy spaces only 'nuclear AND Bohr-theorem' is
    equivalent to L = 0, so a Fails needs the Bohr premise to hold."""
    if l0.is_holds:
        return ThreeValued.holds("L = 0: nuclear (and the Bohr theorem holds)")
    if l0.is_fails and bohr.is_holds:
        return ThreeValued.fails(
            "L > 0 while the Bohr theorem holds, so nuclearity must fail",
            l0.witness or {},
        )
    if l0.is_fails:
        return ThreeValued.inconclusive(
            "L > 0 rules out the conjunction 'nuclear and Bohr theorem' only; "
            "the Bohr premise is not established"
        )
    return ThreeValued.inconclusive("strip width not exact; nuclearity undecided")


def build_report(freq: Frequency) -> StructureReport:
    """Derive the per-space structural flags for a frequency."""
    bohr = classify_bohr_theorem(freq)
    l0 = _l_zero_fact(freq)
    hyper = check_hypercontractive(freq)
    est = estimate_L(freq, n_max=min(freq.n_max, 20_000))

    always_frechet = ThreeValued.holds("complete projective limit of Banach levels")
    always_barrelled = ThreeValued.holds("Frechet spaces are barrelled")
    always_montel = ThreeValued.holds("Frechet-Schwartz spaces are Montel")
    schwartz = ThreeValued.holds("translation linking maps are compact; always Schwartz")

    bohr_equiv = _gate(
        bohr, "equivalent to the uniform-convergence (Bohr) theorem for the frequency"
    )
    d_inf = SpaceVerdicts(
        space="D_inf_plus",
        is_frechet=bohr_equiv,
        is_barrelled=bohr_equiv,
        is_montel=bohr_equiv,
        is_schwartz=schwartz,
        monomial_basis=_gate(bohr, "monomials form a basis under the Bohr theorem"),
        is_nuclear=(
            ThreeValued.holds("nuclear Frechet iff L = 0; L = 0 exactly")
            if l0.is_holds
            else ThreeValued.fails("nuclear Frechet iff L = 0; L > 0 exactly",
                                   l0.witness or {})
            if l0.is_fails
            else ThreeValued.inconclusive("nuclear Frechet iff L = 0; L not exact")
        ),
        coincides_with_hardy=_gate(
            bohr, "equals the limit-uniform Hardy space iff the Bohr theorem holds"
        ),
        hypercontractive=hyper,
    )

    h_p = SpaceVerdicts(
        space="H_p_plus",
        is_frechet=always_frechet,
        is_barrelled=always_barrelled,
        is_montel=always_montel,
        is_schwartz=schwartz,
        monomial_basis=ThreeValued.holds("monomials form a basis for 1 < p < infinity"),
        is_nuclear=(
            ThreeValued.holds("nuclear iff L = 0; L = 0 exactly")
            if l0.is_holds
            else ThreeValued.fails("nuclear iff L = 0; L > 0 exactly", l0.witness or {})
            if l0.is_fails
            else ThreeValued.inconclusive("nuclear iff L = 0; L not exact")
        ),
        coincides_with_hardy=ThreeValued.holds("member of the Hardy scale by definition"),
        hypercontractive=hyper,
    )

    h_1 = SpaceVerdicts(
        space="H_1_plus",
        is_frechet=always_frechet,
        is_barrelled=always_barrelled,
        is_montel=always_montel,
        is_schwartz=schwartz,
        monomial_basis=_gate(bohr, "monomials form a basis whenever the Bohr theorem holds"),
        is_nuclear=_nuclear_via_conjunction(l0, bohr),
        coincides_with_hardy=ThreeValued.holds("member of the Hardy scale by definition"),
        hypercontractive=hyper,
    )

    h_inf = SpaceVerdicts(
        space="H_inf_plus",
        is_frechet=always_frechet,
        is_barrelled=always_barrelled,
        is_montel=always_montel,
        is_schwartz=schwartz,
        monomial_basis=_gate(
            bohr, "monomials form a basis exactly when the Bohr theorem holds"
        ),
        is_nuclear=_nuclear_via_conjunction(l0, bohr),
        coincides_with_hardy=ThreeValued.holds("member of the Hardy scale by definition"),
        hypercontractive=hyper,
    )

    halfplane = SpaceVerdicts(
        space="H_inf_plus_halfplane",
        is_frechet=always_frechet,
        is_barrelled=always_barrelled,
        is_montel=always_montel,
        is_schwartz=schwartz,
        monomial_basis=_gate(
            bohr, "monomials form a basis exactly when the Bohr theorem holds"
        ),
        is_nuclear=_nuclear_via_conjunction(l0, bohr),
        coincides_with_hardy=ThreeValued.holds(
            "coefficient-preserving copy of the limit-uniform Hardy space"
        ),
        hypercontractive=hyper,
    )

    report = StructureReport(
        frequency=freq.label(),
        strip_width=est.exact,
        bohr_theorem=bohr,
        spaces=(d_inf, h_1, h_p, h_inf, halfplane),
    )
    report.check_invariants()
    return report


def hardy2_coincidence_demo(freq: Frequency, coeffs: CoefficientSource,
                            horizon: int = 2000, k_max: int = 8) -> list:
    """Side-by-side table of the quadratic seminorm ladder and the weighted
    l2 norms over A(lam).

    The two columns are the same finite sum by construction; the table
    documents the identification of the quadratic Hardy ladder with the
    weighted l2 echelon norms.  Rows are (k, ladder value, weighted value,
    |difference|).
    """
    series = DirichletSeries(freq=freq, coeffs=coeffs)
    ladder = seminorm_ladder(series, AdmissibleSpace.lp(2.0), k_max, horizon)
    matrix = KoetheMatrix(freq)
    rows = []
    for entry in ladder:
        value, _ = weighted_norm(matrix, coeffs, 2.0, entry.k, horizon)
        rows.append((entry.k, entry.value, value, abs(entry.value - value)))
    return rows
