from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from graphknots.degreefit import (
    NoFit, QuasiPoly, condition_delta, dplus_sequence, fit_quasipoly, fit_segment, jones_slopes,
    sign_profile, sign_verdict,
)
from graphknots.knotexpr import parse


def test_sequences():
    assert dplus_sequence(parse("T(3,2)"), 6) == [0, F(9, 2), 12, F(45, 2), 36, F(105, 2)]
    assert dplus_sequence(parse("U"), 4) == [0, F(1, 2), 1, F(3, 2)]


def test_threaded_sequence_matches():
    k = parse("C(5,3; T(3,2))")
    assert dplus_sequence(k, 8, jobs=4) == dplus_sequence(k, 8)


def test_fit_trefoil_and_unknot():
    qp = fit_quasipoly(dplus_sequence(parse("T(3,2)"), 16))
    assert (qp.period, qp.coeffs, qp.stabilization) == (1, ((F(3, 2), 0, F(-3, 2)),), 1)
    qp = fit_quasipoly(dplus_sequence(parse("U"), 16))
    assert (qp.period, qp.coeffs, qp.stabilization) == (1, ((0, F(1, 2), F(-1, 2)),), 1)


def test_fit_example_knot_tail():
    qp = fit_quasipoly(dplus_sequence(parse("C(191,2; C(23,4; T(3,2)))"), 12))
    assert qp.period == 1
    assert qp.coeffs == ((96, F(-7, 2), F(-185, 2)),)
    assert qp.stabilization == 7


def test_slopes():
    def slopes(text):
        return jones_slopes(fit_quasipoly(dplus_sequence(parse(text), 12)))
    assert slopes("T(3,2)") == [6]
    assert slopes("U") == [0]
    assert slopes("C(7,2; T(3,2))") == [24]


def test_period_two_fit():
    qp = fit_quasipoly(dplus_sequence(parse("T(5,3)"), 16))
    assert qp.period == 2
    assert qp.coeffs == ((F(15, 4), 0, F(-18, 4)), (F(15, 4), 0, F(-15, 4)))


def test_no_fit():
    with pytest.raises(NoFit):
        fit_quasipoly([0, 1, 2], tail=2)
    with pytest.raises(NoFit):
        fit_quasipoly([F(n ** 3) for n in range(1, 20)], max_period=2)


def test_skipped_periods_and_stabilization():
    # a glitch at n=2 on top of n^2: period 1 still fits, stabilization 3
    seq = [F(n * n) for n in range(1, 13)]
    seq[1] += 5
    qp = fit_quasipoly(seq)
    assert qp.coeffs == ((1, 0, 0),) and qp.stabilization == 3


quad = st.tuples(*(st.fractions(max_denominator=4).map(lambda x: x.limit_denominator(4)),) * 3)


@given(st.lists(quad, min_size=1, max_size=3), st.integers(0, 3))
def test_fit_recovers_quasipolynomials(triples, shift):
    period = len(triples)
    truth = QuasiPoly(period, tuple(triples)).minimized()
    seq = [truth(n) for n in range(1, 6 * period + 6)]
    qp = fit_quasipoly(seq, max_period=3)
    assert qp.same_function(truth)
    assert qp.stabilization == 1
    seg = fit_segment(seq, 1, len(seq), max_period=3)
    assert seg is not None and seg.same_function(truth)


def test_json_round_trip():
    qp = QuasiPoly(2, ((F(15, 4), 0, F(-9, 2)), (F(15, 4), 0, F(-15, 4))), 1, 16)
    assert QuasiPoly.from_json(qp.to_json()) == qp
    assert qp.to_json()["classes"][0]["c"] == "-9/2"


def test_condition_delta():
    assert condition_delta(QuasiPoly(1, ((F(3, 2), 0, F(-3, 2)),)))[0]
    ok, why = condition_delta(QuasiPoly(1, ((0, F(1, 2), F(-1, 2)),)))
    assert not ok and why == ["b > 0"]
    ok, why = condition_delta(QuasiPoly(3, ((1, 0, 0), (1, 0, 0), (2, 0, 0))))
    assert not ok and "period 3 > 2" in why
    ok, why = condition_delta(QuasiPoly(1, ((F(1, 8), 0, 0),)))
    assert why == ["4a not an integer"]


def test_sign_profiles():
    prof = sign_profile(parse("T(5,3)"), 10)
    assert prof.signs == [(-1) ** (n - 1) for n in range(1, 11)] and prof.verdict == "HoldsOnRange"
    prof = sign_profile(parse("T(-5,3)"), 10)
    assert prof.signs == [1] * 10 and prof.holds
    assert sign_profile(parse("S(T(3,2), T(5,2))"), 10).holds


def test_sign_verdict():
    assert sign_verdict([1, -1, 1, -1]) is None
    assert sign_verdict([1, -1, 1, 1]) == (2, 4)
