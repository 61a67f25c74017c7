from fractions import Fraction
from math import comb, factorial

import pytest

from kneser_bandwidth.bounds import (
    REGIME_MEANINGFUL, REGIME_NOT_APPLICABLE, REGIME_NOT_MEANINGFUL, asym_upper_terms,
    lower_thm27, m_upper_estimate, proof_constants, regime, report, trivial_upper,
)
from kneser_bandwidth.certificates import certified_upper_bound
from kneser_bandwidth.layout import InfeasibleLayout


@pytest.mark.parametrize("n,r,expected", [(5, 2, 8), (10, 3, 102), (12, 3, 193)])
def test_trivial_upper(n, r, expected):
    assert trivial_upper(n, r) == expected


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_trivial_upper_at_2r(r):
    assert trivial_upper(2 * r, r) == comb(2 * r, r) - comb(2 * r - 1, r - 1) // 2


def test_trivial_upper_edgeless():
    with pytest.raises(ValueError):
        trivial_upper(5, 3)


def test_lower_bound_pin():
    v = lower_thm27(20, 4)
    assert v == Fraction(3553, 2)
    assert v == 4845 - Fraction(969, 2) - 400 + 120 - 2304


def test_lower_bound_needs_r4():
    with pytest.raises(ValueError):
        lower_thm27(20, 3)


def test_lower_bound_monotone_from_20():
    vals = [lower_thm27(n, 4) for n in range(20, 90)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_asym_terms_r3():
    for n in range(12, 41):
        assert asym_upper_terms(n, 3) == comb(n, 3) - Fraction(comb(n - 1, 2), 2) - 2 * n + 5


def test_asym_terms_r4_direct():
    n = 20
    want = comb(n, 4) - Fraction(comb(n - 1, 3), 2) - Fraction(2 * n * n, 2) + 6 * n
    assert asym_upper_terms(n, 4) == want


def test_regime_flags():
    assert regime(12, 3) == REGIME_NOT_APPLICABLE
    assert regime(20, 4) == REGIME_NOT_MEANINGFUL
    for n in range(12, 25):
        flag = regime(n, 4)
        assert (flag == REGIME_MEANINGFUL) == (lower_thm27(n, 4) > Fraction(comb(n, 4), 2))


def test_proof_constants_20_4():
    c = proof_constants(20, 4)
    assert c.N == 485 - 4 * comb(18, 2) == -127
    assert c.ell == comb(18, 2) + 48 * comb(17, 1)
    assert c.m == Fraction(comb(18, 2) + comb(17, 2) + comb(16, 2) + comb(15, 2), 2)


def test_proof_constants_large_n():
    assert proof_constants(100, 4).N > 0


def test_m_estimate_sweep():
    for r in range(3, 8):
        for n in range(r + 5, 80):
            assert proof_constants(n, r).m <= m_upper_estimate(n, r), (n, r)


def test_proof_constants_domain():
    with pytest.raises(ValueError):
        proof_constants(7, 3)


def test_report_12_3():
    rep = report(12, 3, ["trivial", "paper"])
    assert rep.dilations["paper"] < rep.dilations["trivial"]
    assert rep.measured_dilation == 173 and rep.certified_upper == 173
    assert rep.lower_thm27 is None and rep.gap is None
    assert rep.residual_upper == Fraction(1, 2)
    assert rep.notes


def test_report_14_4():
    rep = report(14, 4, ["paper"])
    assert rep.certified_upper >= rep.measured_dilation
    assert rep.gap == rep.certified_upper - rep.lower_thm27


def test_report_r2_trivial_only():
    rep = report(5, 2, ["trivial"])
    assert rep.trivial_upper == 8 and rep.dilations["trivial"] <= 8
    assert rep.feasibility == "r_min" and rep.certified_upper is None
    assert rep.asym_upper_terms is None and rep.residual_upper is None
    assert rep.regime_flag == REGIME_NOT_APPLICABLE


def test_report_infeasible_paper_raises():
    with pytest.raises(InfeasibleLayout):
        report(9, 3, ["paper"])
    rep = report(9, 3, ["trivial"])
    assert rep.feasibility == "n_min" and rep.certified_upper is None


def test_residual_r3_bounded():
    res = [asym_upper_terms(n, 3) - certified_upper_bound(n, 3) for n in range(12, 41)]
    assert max(res) <= 1 and min(res) >= 0


def test_savings_over_trivial():
    for r, ns in [(3, range(16, 31)), (4, range(16, 25))]:
        for n in ns:
            saving = trivial_upper(n, r) - certified_upper_bound(n, r)
            assert saving > Fraction(n ** (r - 2), factorial(r - 2)), (n, r)
