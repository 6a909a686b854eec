import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gendirichlet import (
    Degenerate,
    Frequency,
    NonMonotone,
    OutOfRange,
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
from gendirichlet.frequency import primes

from conftest import EXACT_L, REGISTERED_FREQUENCIES


# ---------------------------------------------------------------------------
# materialization


def test_materialize_log_n():
    got = materialize(Frequency.log_n(), 3)
    assert got == pytest.approx([0.0, math.log(2), math.log(3)], abs=0)


def test_materialize_naturals_starts_at_zero():
    assert list(materialize(Frequency.naturals(), 4)) == [0.0, 1.0, 2.0, 3.0]


def test_materialize_log_prime():
    got = materialize(Frequency.log_prime(), 3)
    assert got == pytest.approx([math.log(2), math.log(3), math.log(5)], abs=0)


def test_materialize_scaled():
    got = materialize(Frequency.scaled_log_n(2), 5)
    assert got == pytest.approx([2 * math.log(n) for n in range(1, 6)])


def test_materialize_log_log_n():
    got = materialize(Frequency.log_log_n(), 3)
    assert got[0] == pytest.approx(math.log(math.log(3)))
    assert np.all(np.diff(got) > 0) and got[0] > 0


def test_materialize_rational_combination_exact_sum_order():
    basis = [1.0, math.sqrt(2.0)]
    rows = [[Fraction(1)], [Fraction(1), Fraction(1, 2)], [Fraction(0), Fraction(2)]]
    freq = Frequency.rational_combination(basis, rows)
    got = materialize(freq, 3)
    expect = [1.0, math.fsum([1.0, 0.5 * math.sqrt(2.0)]), math.fsum([2.0 * math.sqrt(2.0)])]
    assert list(got) == expect  # bit-for-bit: same summation order


def test_explicit_validation():
    with pytest.raises(NonMonotone):
        Frequency.explicit([0.0, 1.0, 1.0])
    with pytest.raises(NonMonotone):
        Frequency.explicit([-0.5, 1.0])
    freq = Frequency.explicit([0.0, 1.0, 5.0])
    with pytest.raises(OutOfRange):
        materialize(freq, 4)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=300),
    pick=st.integers(min_value=0, max_value=6),
)
def test_prefixes_strictly_increasing_and_nonnegative(n, pick):
    freq = list(REGISTERED_FREQUENCIES.values())[pick]
    lam = materialize(freq, n)
    assert lam[0] >= 0.0
    assert np.all(np.diff(lam) > 0)


def test_primes_sieve_against_trial_division():
    def is_prime(m):
        return m >= 2 and all(m % d for d in range(2, int(m ** 0.5) + 1))

    ps = primes(200)
    assert len(ps) == 200
    assert all(is_prime(int(p)) for p in ps)
    assert list(ps[:6]) == [2, 3, 5, 7, 11, 13]


# ---------------------------------------------------------------------------
# strip width L


@pytest.mark.parametrize("name", list(REGISTERED_FREQUENCIES))
def test_exact_strip_widths(name):
    est = estimate_L(REGISTERED_FREQUENCIES[name], n_max=2000)
    assert est.exact == EXACT_L[name]
    assert est.confidence.verdict is Verdict.HOLDS
    assert est.value == est.exact


def test_numeric_estimate_log_n_is_exactly_one():
    est = estimate_L(Frequency.log_n(), n_max=10_000)
    assert est.estimate == pytest.approx(1.0, abs=1e-12)


def test_numeric_estimate_naturals_near_zero():
    est = estimate_L(Frequency.naturals(), n_max=10_000)
    assert 0 < est.estimate < 0.01


def test_explicit_estimate_matches_manual_scan_and_is_inconclusive():
    values = [0.0, 0.8, 1.1, 2.7, 3.9, 4.4]
    freq = Frequency.explicit(values)
    est = estimate_L(freq, n_max=6, window=3)
    manual = max(math.log(n) / values[n - 1] for n in (4, 5, 6))
    assert est.value == pytest.approx(manual, abs=0)
    assert est.exact is None
    assert est.confidence.verdict is Verdict.INCONCLUSIVE


def test_degenerate_frequency():
    with pytest.raises(Degenerate):
        estimate_L(Frequency.explicit([0.0]), n_max=1, window=2)


# ---------------------------------------------------------------------------
# gap conditions


def test_bohr_condition_log_n_with_l_one_holds():
    tv = check_bohr_condition(Frequency.log_n(), l=1.0, delta=0.01)
    assert tv.verdict is Verdict.HOLDS
    assert tv.rule


def test_bohr_condition_log_n_small_l_fails_with_witness():
    tv = check_bohr_condition(Frequency.log_n(50_000), l=0.3, delta=0.01, n_max=50_000)
    assert tv.verdict is Verdict.FAILS
    assert tv.witness is not None and "trailing_C" in tv.witness


def test_bohr_condition_sqrt_log_fails_every_l():
    # the empirical constant decays below the 1e-3 threshold at horizons that
    # grow with l; each verdict needs both the registered rule and the numbers
    for l, n_max in ((0.5, 10_000), (1.0, 10_000), (2.0, 1_000_000)):
        tv = check_bohr_condition(Frequency.log_n_pow(0.5), l=l, delta=0.01, n_max=n_max)
        assert tv.verdict is Verdict.FAILS, l


def test_bohr_condition_fails_heuristic_waits_for_numerics():
    # registered decay rule alone is not enough: at l=3 the constant has not
    # yet decayed below threshold at this horizon, so the verdict stays open
    tv = check_bohr_condition(Frequency.log_n_pow(0.5), l=3.0, delta=0.01, n_max=10_000)
    assert tv.verdict is Verdict.INCONCLUSIVE
    assert "decay rule" in tv.rule


def test_bohr_condition_naturals_holds_any_l():
    for l in (0.01, 1.0, 10.0):
        tv = check_bohr_condition(Frequency.naturals(), l=l, delta=0.5)
        assert tv.verdict is Verdict.HOLDS


def test_bohr_condition_log_prime():
    assert check_bohr_condition(Frequency.log_prime(), l=1.0, delta=0.1).verdict is Verdict.HOLDS
    assert check_bohr_condition(Frequency.log_prime(), l=0.5, delta=0.1).verdict is Verdict.INCONCLUSIVE


def test_bohr_condition_explicit_inconclusive_with_empirical_constant():
    tv = check_bohr_condition(Frequency.explicit([0.0, 1.0, 1.0 + 1e-12, 5.0]), l=1.0, delta=0.1)
    assert tv.verdict is Verdict.INCONCLUSIVE
    assert "min_C" in tv.witness


def test_landau_condition_families():
    for alpha in (0.3, 0.5, 1.0, 2.0):
        tv = check_landau_condition(Frequency.log_n_pow(alpha), delta=0.5)
        assert tv.verdict is Verdict.HOLDS, alpha
    assert check_landau_condition(Frequency.log_n(), delta=0.5).verdict is Verdict.HOLDS
    assert check_landau_condition(
        Frequency.explicit([0.0, 1.0, 1.0 + 1e-12, 5.0]), delta=0.5
    ).verdict is Verdict.INCONCLUSIVE


def test_landau_condition_log_log_fails_small_delta_holds_large():
    assert check_landau_condition(Frequency.log_log_n(), delta=0.5).verdict is Verdict.FAILS
    assert check_landau_condition(Frequency.log_log_n(), delta=2.0).verdict is Verdict.HOLDS


@pytest.mark.parametrize("name", list(REGISTERED_FREQUENCIES))
def test_bohr_implies_landau_crosscheck(name):
    freq = REGISTERED_FREQUENCIES[name]
    for l in (0.5, 1.0, 2.0):
        bc = check_bohr_condition(freq, l=l, delta=0.25, n_max=2000)
        if bc.verdict is Verdict.HOLDS:
            lc = check_landau_condition(freq, delta=0.25, n_max=2000)
            assert lc.verdict is Verdict.HOLDS, (name, l)


# ---------------------------------------------------------------------------
# decompositions


def _factor(n):
    out, m, d = {}, n, 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def test_log_n_decomposition_matches_factorization_oracle():
    dec = bohr_decomposition(Frequency.log_n(), 60)
    assert dec.natural_type
    prime_of_col = {i: b.log_of for i, b in enumerate(dec.basis)}
    for n in range(1, 61):
        row = dec.rows[n - 1]
        rebuilt = 1
        for col, r in row.items():
            assert r.denominator == 1
            rebuilt *= prime_of_col[col] ** r.numerator
        assert rebuilt == n  # exact integer reconstruction
        assert {prime_of_col[c]: int(r) for c, r in row.items()} == _factor(n) if n > 1 else row == {}


def test_log_n_decomposition_row_12():
    dec = bohr_decomposition(Frequency.log_n(), 12)
    assert dec.dense_row(12, 3) == [Fraction(2), Fraction(1), Fraction(0)]


def test_log_prime_decomposition_is_identity():
    dec = bohr_decomposition(Frequency.log_prime(), 8)
    assert dec.natural_type
    for n in range(1, 9):
        assert dec.rows[n - 1] == {n - 1: Fraction(1)}
        assert dec.basis[n - 1].log_of == int(primes(8)[n - 1])


def test_naturals_decomposition_value_level():
    dec = bohr_decomposition(Frequency.naturals(), 10)
    assert [b.exact for b in dec.basis] == [Fraction(1)]
    # the term whose value is 5 sits at index 6 and has row (5)
    lam = materialize(Frequency.naturals(), 10)
    idx = int(np.flatnonzero(lam == 5.0)[0]) + 1
    assert dec.rows[idx - 1] == {0: Fraction(5)}
    for n in range(1, 11):
        assert sum(float(r) for r in dec.rows[n - 1].values()) == lam[n - 1]


def test_scaled_decomposition_natural_only_for_integers():
    assert bohr_decomposition(Frequency.scaled_log_n(2), 20).natural_type
    assert not bohr_decomposition(Frequency.scaled_log_n(Fraction(1, 2)), 20).natural_type


def test_rational_combination_roundtrip():
    basis = [0.5, 1.7]
    rows = [[Fraction(1)], [Fraction(0), Fraction(1)], [Fraction(2), Fraction(1)]]
    freq = Frequency.rational_combination(basis, rows)
    dec = bohr_decomposition(freq)
    lam = materialize(freq, 3)
    for n in range(1, 4):
        assert dec.reconstruct(n) == lam[n - 1]  # same arithmetic, bit-for-bit
    assert dec.natural_type


def test_unsupported_decompositions():
    for freq in (Frequency.log_n_pow(0.5), Frequency.explicit([0.1, 0.7]), Frequency.log_log_n()):
        with pytest.raises(UnsupportedKind):
            bohr_decomposition(freq)


# ---------------------------------------------------------------------------
# Bohr-theorem classification and hypercontractivity


def test_classification_routes():
    tv = classify_bohr_theorem(Frequency.log_prime())
    assert tv.verdict is Verdict.HOLDS and "independen" in tv.rule
    tv = classify_bohr_theorem(Frequency.naturals())
    assert tv.verdict is Verdict.HOLDS and "L = 0" in tv.rule
    tv = classify_bohr_theorem(Frequency.log_n_pow(0.5))
    assert tv.verdict is Verdict.HOLDS and "Landau" in tv.rule


def test_classification_open_cases_stay_inconclusive():
    assert classify_bohr_theorem(Frequency.log_log_n()).verdict is Verdict.INCONCLUSIVE
    assert classify_bohr_theorem(Frequency.explicit([0.3, 1.1, 2.9])).verdict is Verdict.INCONCLUSIVE


@pytest.mark.parametrize("name", list(REGISTERED_FREQUENCIES))
def test_classification_never_fails(name):
    assert classify_bohr_theorem(REGISTERED_FREQUENCIES[name]).verdict is not Verdict.FAILS


def test_hypercontractive_examples():
    assert check_hypercontractive(Frequency.log_n()).verdict is Verdict.HOLDS
    assert check_hypercontractive(Frequency.log_prime()).verdict is Verdict.HOLDS
    assert check_hypercontractive(Frequency.naturals()).verdict is Verdict.HOLDS
    assert check_hypercontractive(Frequency.log_n_pow(2)).verdict is Verdict.HOLDS
    assert check_hypercontractive(Frequency.scaled_log_n(2)).verdict is Verdict.HOLDS
    assert check_hypercontractive(Frequency.explicit([0.3, 0.9])).verdict is Verdict.INCONCLUSIVE
    assert check_hypercontractive(Frequency.scaled_log_n(Fraction(3, 2))).verdict is Verdict.INCONCLUSIVE
    assert check_hypercontractive(Frequency.log_n_pow(0.5)).verdict is Verdict.INCONCLUSIVE
    assert check_hypercontractive(Frequency.log_log_n()).verdict is Verdict.INCONCLUSIVE


def test_hypercontractive_rational_combination_natural_type():
    freq = Frequency.rational_combination([0.7, 1.3], [[Fraction(1)], [Fraction(2)], [Fraction(1), Fraction(1)]])
    assert check_hypercontractive(freq).verdict is Verdict.HOLDS
    freq = Frequency.rational_combination([0.7], [[Fraction(1, 2)], [Fraction(1)]])
    assert check_hypercontractive(freq).verdict is Verdict.INCONCLUSIVE
