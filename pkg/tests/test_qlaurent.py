import pytest
from hypothesis import given, strategies as st

from graphknots.qlaurent import (
    DivisionByZero, LaurentPoly, NotDivisible, ZeroPolynomial, add, degree_data, eval_at_one,
    exact_div, from_text, mirror, mul, quantum_integer, to_text,
)

P = LaurentPoly


def q(quarters, c=1):
    return P.monomial(quarters, c)


polys = st.dictionaries(st.integers(-40, 40), st.integers(-20, 20), max_size=6).map(P)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_additive_inverse_and_identity():
    assert add(q(2), q(2, -1)) == P.zero()
    p = q(4) + 1
    assert add(p, P.zero()) == p


def test_overlapping_support():
    assert add(q(4) + 1, q(-4) + 1) == q(4) + 2 + q(-4)


def test_difference_of_squares():
    assert mul(q(2) - q(-2), q(2) + q(-2)) == q(4) - q(-4)
    p = q(3, 7) - 2
    assert mul(p, P.one()) == p


def test_quantum_integer_factorization():
    assert exact_div(q(4) - q(-4), q(2) - q(-2)) == q(2) + q(-2)
    p = q(-5) + 3
    assert exact_div(p, P.one()) == p


def test_trefoil_round_trip():
    from graphknots.cjones import jones_torus
    j = jones_torus(3, 2, 2)
    u = quantum_integer(2)
    assert exact_div(j * u, u) == j


def test_not_divisible():
    with pytest.raises(NotDivisible):
        exact_div(q(4) + 1, q(2) - q(-2))


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        exact_div(q(4), P.zero())


def test_degree_data_examples():
    j = -q(18) + q(10) + q(6) + q(2)
    assert degree_data(j) == (9 / 2, 1 / 2, -1, -1)
    assert degree_data(P.constant(5)) == (0, 0, 1, 5)
    assert degree_data(q(-12)) == (-3, -3, 1, 1)
    with pytest.raises(ZeroPolynomial):
        degree_data(P.zero())


def test_mirror_and_eval():
    assert mirror(q(4) + 2) == q(-4) + 2
    assert eval_at_one(quantum_integer(3)) == 3
    assert eval_at_one(P.zero()) == 0
    assert eval_at_one(-q(18) + q(10) + q(6) + q(2)) == 2


def test_text_format():
    assert to_text(-q(18) + q(10) + q(6) + q(2)) == "-q^(18/4) + q^(10/4) + q^(6/4) + q^(2/4)"
    assert to_text(P.zero()) == "0"
    assert to_text(q(-3, -7)) == "-7*q^(-3/4)"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == P.zero()


@given(polys, nonzero)
def test_division_round_trip(a, d):
    assert exact_div(a * d, d) == a


@given(polys)
def test_mirror_involution_and_text(a):
    assert mirror(mirror(a)) == a
    assert from_text(to_text(a)) == a
    assert eval_at_one(mirror(a)) == eval_at_one(a)


@given(nonzero, nonzero)
def test_degrees_add_under_product(a, b):
    da, db, dab = degree_data(a), degree_data(b), degree_data(a * b)
    assert dab[0] == da[0] + db[0]
    assert dab[1] == da[1] + db[1]
    assert dab[2] == da[2] * db[2]
