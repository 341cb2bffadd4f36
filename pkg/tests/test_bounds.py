from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from schurbound import bounds
from schurbound.bounds import Exponent, PGroupParams
from schurbound.errors import DuplicatePrime, HypothesisViolated, InvalidParams
from schurbound.fixtures import TABLE1

ROWS = [r[0] for r in TABLE1]


@st.composite
def params(draw, max_d=12):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    d = draw(st.integers(2, max_d))
    delta = draw(st.integers(2, d))
    kp = draw(st.integers(1, comb(delta, 2)))
    k = kp + draw(st.integers(0, 6))
    n = d + k + draw(st.integers(0, 4))
    return PGroupParams(p, n, d, delta, k, kp)


def twice_thm33(P):
    """2 * exponent, by a second transcription using only integers."""
    v = comb(P.delta, 2) - P.kprime
    r = 1
    while comb(r + 1, 2) <= v:
        r += 1
    t = v - comb(r, 2)
    return (P.d - 1) * (P.n + P.k) - 2 * P.k * (P.d - P.delta) - 2 * comb(P.delta, 3) + 2 * comb(r, 3) + 2 * comb(t, 2)


@pytest.mark.parametrize("row, thm33, compare", TABLE1)
def test_table1(row, thm33, compare):
    P = PGroupParams(*row)
    assert bounds.exp_thm33(P).effective == thm33
    assert bounds.exp_rai_ineq4(P).effective == compare


def test_table1_thm14_column():
    got = [bounds.exp_rai_thm14(r).effective for r in ROWS]
    assert got == [90, 108, 217, 369]


def test_cor34():
    assert bounds.exp_cor34(ROWS[0]).effective == 78
    assert bounds.exp_cor34(ROWS[3]).effective == 297


def test_cor34_full_rank_branch():
    d = 5
    P = PGroupParams(3, d + 10, d, d, 10, 10)
    assert bounds.exp_cor34(P) == bounds.exp_thm33(P) + d


@pytest.mark.parametrize("d, val", [(3, 8), (4, 20)])
def test_rai_special(d, val):
    assert bounds.exp_rai_special(d).effective == val


@pytest.mark.parametrize("d", range(3, 13))
def test_rai_special_equals_thm33_full_rank(d):
    k = comb(d, 2)
    assert bounds.exp_rai_special(d) == bounds.exp_thm33(PGroupParams(3, d + k, d, d, k, k))


def test_thm38_and_cor39():
    assert bounds.exp_thm38(3, 8, 5, 3).effective == 15
    assert bounds.exp_cor39(3, 8, 5, 3).effective == 20
    # 30 - (4 + 3 + 2) - 1
    assert bounds.exp_thm38(3, 9, 6, 3).effective == 20
    assert bounds.exp_cor39(3, 9, 6, 3).effective == 26
    with pytest.raises(HypothesisViolated):
        bounds.exp_thm38(3, 9, 5, 4)
    with pytest.raises(HypothesisViolated):
        bounds.exp_cor39(3, 9, 5, 4)
    with pytest.raises(InvalidParams):
        bounds.exp_thm38(3, 10, 6, 3)


def test_thm35_product():
    a = PGroupParams(3, 10, 6, 5, 4, 4)
    b = PGroupParams(5, 10, 6, 5, 4, 4)
    out = bounds.exp_thm35_product([a, b])
    assert [p for p, _ in out] == [3, 5] and out[0][1] == out[1][1] == bounds.exp_thm33(a)
    assert bounds.exp_thm35_product([a]) == [(3, bounds.exp_thm33(a))]
    with pytest.raises(DuplicatePrime):
        bounds.exp_thm35_product([a, a])


def test_ew_chain():
    assert bounds.exp_ew_chain((3, 10, 6, 5, 4, 4), 8).effective == 23
    assert bounds.exp_ew_chain((3, 8, 5, 5, 3, 3), 8).effective == 14
    raw = bounds.exp_ew_chain((3, 8, 5, 5, 3, 3), 0)
    assert raw.exact == Fraction(4 * 11, 2)
    with pytest.raises(InvalidParams):
        bounds.exp_ew_chain((3, 8, 5, 5, 3, 3), -1)


@pytest.mark.parametrize(
    "bad",
    [
        (4, 10, 6, 5, 4, 4),  # not prime
        (3, 10, 6, 7, 4, 4),  # delta > d
        (3, 10, 6, 1, 4, 1),  # delta < 2
        (3, 9, 6, 5, 4, 4),  # k > n - d
        (3, 10, 6, 5, 4, 5),  # k' > k
        (3, 20, 6, 3, 8, 4),  # k' > C(delta,2)
        (3, 10, 6, 5, 0, 0),
    ],
)
def test_invalid_params(bad):
    with pytest.raises(InvalidParams):
        PGroupParams(*bad)


def test_compare_report_rows():
    expected = [(71, 81, 90), (89, 108, 108), (182, 217, 217), (287, 369, 369)]
    for row, exp in zip(ROWS, expected):
        rep = bounds.compare_report(row)
        vals = {e.name: e.exponent.effective for e in rep["bounds"]}
        assert (vals["thm33"], vals["rai_ineq4"], vals["rai_thm14"]) == exp


def test_boundary_equality_flag():
    # delta = k' + 1
    rep = bounds.compare_report(PGroupParams(3, 14, 6, 6, 5, 5))
    assert rep["flags"]["thm33_eq_ineq4"]


def test_special_entries_present():
    names = [e.name for e in bounds.compare_report(PGroupParams(3, 8, 5, 5, 3, 3))["bounds"]]
    assert "thm38" in names and "cor39_h2" in names
    names = [e.name for e in bounds.compare_report(PGroupParams(3, 6, 3, 3, 3, 3))["bounds"]]
    assert "rai_special" in names


@given(params())
def test_formulas_and_ordering(P):
    a, b, c = bounds.exp_thm33(P), bounds.exp_rai_ineq4(P), bounds.exp_rai_thm14(P)
    assert 2 * a.exact == twice_thm33(P)
    assert a <= b <= c
    if P.d == P.delta and P.delta >= P.kprime + 1:
        assert a == c
    for e in (a, b, c, bounds.exp_cor34(P)):
        assert e.exact - e.effective in (0, Fraction(1, 2))


@given(st.integers(4, 12), st.integers(3, 10))
def test_thm38_improves_thm33(d, k):
    if not d > k + 1:
        return
    P = PGroupParams(3, d + k, d, d, k, k)
    assert bounds.exp_thm38(3, d + k, d, k) <= bounds.exp_thm33(P)


def test_lemma37():
    assert bounds.lemma37_check(5, 3)
    assert bounds.lemma37_check(6, 2)
    with pytest.raises(HypothesisViolated):
        bounds.lemma37_check(4, 3)
    for delta in range(3, 41):
        for kp in range(1, delta - 1):
            assert bounds.lemma37_check(delta, kp)


def test_lemma37_printed_identity_fails():
    # the sign pattern with "+" on both binomials does not hold at (5, 3)
    assert comb(5, 3) + comb(4, 3) + comb(0, 2) == 14 != sum(5 - i for i in range(1, 5))


def test_exponent_type():
    e = Exponent(Fraction(7, 2))
    assert e.effective == 3 and str(e) == "7/2"
    assert (e + 1).exact == Fraction(9, 2)
    with pytest.raises(ValueError):
        Exponent(Fraction(1, 3))


def test_params_accept_dict_and_tuple():
    d = {"p": 5, "n": 21, "d": 7, "delta": 6, "k": 14, "kprime": 14}
    assert bounds.exp_thm33(d) == bounds.exp_thm33(tuple(d.values())) == bounds.exp_thm33(PGroupParams(**d))
