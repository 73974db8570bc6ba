import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphknots.cjones import (
    JonesCache, eps, jones, jones_cable, jones_sum, jones_torus, jones_unknot, max_color,
    normalized_torus,
)
from graphknots.knotexpr import U, parse
from graphknots.qlaurent import LaurentPoly, eval_at_one, from_text, quantum_integer

TREFOIL_2 = from_text("-q^(18/4) + q^(10/4) + q^(6/4) + q^(2/4)")


def test_unknot_values():
    assert jones_unknot(1) == LaurentPoly.one()
    assert jones_unknot(2) == from_text("q^(2/4) + q^(-2/4)")
    assert jones_unknot(3) == from_text("q^(4/4) + 1*q^(0/4) + q^(-4/4)")


def test_bad_colors():
    for n in (0, -1, 1.5):
        with pytest.raises(ValueError):
            jones_unknot(n)


def test_torus_small_values():
    assert normalized_torus(3, 2, 0) == LaurentPoly.one()
    assert jones_torus(3, 2, 1) == LaurentPoly.one()
    assert jones_torus(3, 2, 2) == TREFOIL_2


def test_trefoil_degree_formula():
    for n in range(1, 21):
        assert jones_torus(3, 2, n).d_plus == Fraction(3, 2) * (n * n - 1)


@pytest.mark.parametrize("a,b", [(3, 2), (5, 2), (5, 3), (7, 4)])
def test_torus_min_degree(a, b):
    # the lowest term of J' is q^{(a-1)(b-1)m/2}; multiplying by [m+1] lowers it by m/2
    for n in range(1, 9):
        dm = jones_torus(a, b, n).d_minus
        assert dm == Fraction((a - 1) * (b - 1) * (n - 1), 2) - Fraction(n - 1, 2)


@pytest.mark.parametrize("a,b", [(3, 2), (5, 3), (7, 2)])
def test_torus_signs(a, b):
    for n in range(1, 11):
        assert jones_torus(a, b, n).degree_data()[2] == (-1) ** (n - 1)
        assert jones_torus(-a, b, n).degree_data()[2] == 1


def test_mirror_torus_is_substitution():
    for n in range(1, 7):
        assert jones_torus(-5, 3, n) == jones_torus(5, 3, n).mirror()


def test_cable_color_one():
    for text in ("C(7,2; T(3,2))", "C(-5,3; T(5,2))", "C(3,2; U)"):
        assert jones(parse(text), 1) == LaurentPoly.one()


def test_cable_of_unknot_small_case():
    assert jones_cable(3, 2, jones_unknot, 2) == TREFOIL_2


def test_cable_two_summands():
    child = lambda m: jones_torus(3, 2, m)
    assert jones_cable(13, 2, child, 2).d_plus == Fraction(39, 2)


def test_sum_identities():
    for n in range(1, 7):
        j = jones_torus(5, 3, n)
        assert jones_sum(j, jones_unknot(n), n) == j
    assert jones_sum(TREFOIL_2, TREFOIL_2, 2).d_plus == Fraction(17, 2)


def test_eps_examples():
    for n in range(1, 9):
        assert eps(parse("T(3,2)"), n) == (-1) ** (n - 1)
        assert eps(parse("T(-3,2)"), n) == 1
        assert eps(parse("S(T(3,2), T(3,2))"), n) == 1


def test_cache_is_transparent():
    k = parse("C(5,2; S(T(3,2), T(5,2)))")
    cached = JonesCache()
    off = JonesCache(enabled=False)
    for n in range(1, 6):
        assert jones(k, n, cached) == jones(k, n, off)
    assert len(cached) > 0 and len(off) == 0


def test_cache_save_load(tmp_path):
    k = parse("C(7,2; T(3,2))")
    c1 = JonesCache()
    vals = [jones(k, n, c1) for n in range(1, 5)]
    path = tmp_path / "cache.json"
    c1.save(path)
    c2 = JonesCache()
    assert c2.load(path) == len(c1)
    assert (("C(7,2; T(3,2))", 4)) in c2
    assert [jones(k, n, c2) for n in range(1, 5)] == vals


def test_cache_version_mismatch(tmp_path):
    path = tmp_path / "old.json"
    path.write_text('{"version": 0, "entries": [["U", 2, "q^(1/4)"]]}')
    c = JonesCache()
    assert c.load(path) == 0 and len(c) == 0


def test_concurrent_fill_agrees():
    k = parse("C(5,3; T(3,2))")
    cache = JonesCache()
    results = {}

    def work(n):
        results[n] = jones(k, n, cache)

    threads = [threading.Thread(target=work, args=(n,)) for n in range(1, 9)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    fresh = JonesCache(enabled=False)
    assert all(results[n] == jones(k, n, fresh) for n in range(1, 9))


def test_color_ceiling():
    from graphknots.cjones import ColorCeilingExceeded
    k = parse("C(191,2; C(23,4; T(3,2)))")
    assert max_color(k, 10) == 4 * (2 * 9 + 1 - 1) + 1
    with pytest.raises(ColorCeilingExceeded):
        jones(k, 10, ceiling=50)


small_exprs = st.sampled_from([
    "U", "T(3,2)", "T(-5,2)", "C(7,2; T(3,2))", "C(-3,2; T(3,2))", "S(T(3,2), T(-3,2))",
    "C(3,2; C(5,2; U))", "S(C(5,2; T(3,2)), U)",
])


@settings(max_examples=40, deadline=None)
@given(small_exprs, st.integers(1, 8))
def test_coefficient_sum_law(text, n):
    assert eval_at_one(jones(parse(text), n)) == n


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (-3, 2), (-7, 3)]), st.integers(1, 9))
def test_cable_of_unknot_matches_morton(ab, n):
    a, b = ab
    assert jones(parse("C(%d,%d; U)" % (a, b)), n) == jones_torus(a, b, n)


@settings(max_examples=20, deadline=None)
@given(small_exprs, small_exprs, st.integers(1, 6))
def test_sum_is_commutative(x, y, n):
    assert jones(parse("S(%s, %s)" % (x, y)), n) == jones(parse("S(%s, %s)" % (y, x)), n)
