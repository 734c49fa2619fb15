import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagpoly.errors import NonIntegral, NotDivisible, Overdetermined
from flagpoly.polyring import (
    NEG_INF,
    ONE,
    ZERO,
    Polynomial,
    Q,
    add,
    evaluate,
    exact_div,
    from_json,
    from_qminus1_basis,
    gcd,
    interpolate,
    mul,
    parse,
    shift_to_qminus1_basis,
    to_json,
    to_latex,
    to_text,
)

P = Polynomial

coeff_lists = st.lists(st.integers(-10**6, 10**6), max_size=8)
polys = coeff_lists.map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_normalization_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()
    assert ZERO.degree == NEG_INF
    assert P([5]).degree == 0
    assert P([-2, 1, 1]).degree == 2


def test_add_examples():
    assert add(Q + 1, Q - 1) == P([0, 2])
    p = P([3, -1, 4])
    assert add(p, ZERO) == p
    assert add(P([-2, 1, 1]), P([0, 0, -1])) == P([-2, 1])
    assert add(P([-2, 1, 1]), P([0, 0, -1])).degree == 1


def test_mul_examples():
    assert mul(Q - 1, Q + 2) == P([-2, 1, 1])
    p = P([7, 0, -3])
    assert mul(p, ONE) == p
    prod = mul(P([1, 1, 1]), Q + 1)
    assert prod == P([1, 2, 2, 1])
    assert prod(2) == 7 * 3


def test_exact_div_examples():
    assert exact_div(P([-2, 1, 1]), Q - 1) == Q + 2
    p = P([4, 0, 1])
    assert exact_div(p, ONE) == p
    with pytest.raises(NotDivisible):
        exact_div(P([1, 0, 1]), Q - 1)
    with pytest.raises(ZeroDivisionError):
        exact_div(p, ZERO)


def test_exact_div_rejects_fractional_quotient():
    with pytest.raises(NotDivisible):
        exact_div(P([0, 1]), P([0, 2]))


def test_eval_examples():
    assert evaluate(P([-2, 1, 1]), 3) == 10
    assert evaluate(P([9, 4, 1]), 0) == 9
    assert evaluate(parse("q^5 + q^3 - 3q^2 - 2q + 3"), 2) == 27
    assert evaluate(P([1, 1]), Fraction(1, 2)) == Fraction(3, 2)


def test_shift_examples():
    assert shift_to_qminus1_basis(P([-2, 1, 1])) == (0, 3, 1)
    assert shift_to_qminus1_basis(P([5])) == (5,)
    assert shift_to_qminus1_basis(Q - 1) == (0, 1)
    assert shift_to_qminus1_basis(ZERO) == ()


def test_interpolate_examples():
    assert interpolate([(2, 3), (3, 4), (5, 6)], 1) == Q + 1
    # (q^2+q+1)(q+1) at 2, 3, 5, 7
    assert interpolate([(2, 21), (3, 52), (5, 186), (7, 456)], 3) == P([1, 2, 2, 1])
    assert interpolate([(2, 1), (3, 1)], 0) == ONE


def test_interpolate_spec_sample_points_are_rejected():
    # the listed samples (2,10),(3,39),(5,155),(7,399) are not values of
    # (q^2+q+1)(q+1); they interpolate to a non-integral cubic
    with pytest.raises(NonIntegral):
        interpolate([(2, 10), (3, 39), (5, 155), (7, 399)], 3)


def test_interpolate_errors():
    with pytest.raises(NonIntegral):
        interpolate([(0, 0), (2, 1)], 1)
    with pytest.raises(Overdetermined):
        interpolate([(2, 3), (3, 4), (5, 7)], 1)
    with pytest.raises(ValueError):
        interpolate([(2, 3)], 1)
    with pytest.raises(ValueError):
        interpolate([(2, 3), (2, 4)], 1)


@given(polys, nonzero_polys)
def test_exact_div_inverts_mul(a, b):
    assert exact_div(mul(a, b), b) == a


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO


@given(polys, st.integers(-20, 20))
def test_shift_round_trip(p, x):
    shifted = shift_to_qminus1_basis(p)
    assert from_qminus1_basis(shifted) == p
    assert sum(c * (x - 1) ** i for i, c in enumerate(shifted)) == p(x)


@settings(max_examples=60)
@given(coeff_lists.filter(lambda c: any(c)), st.integers(1, 3), st.data())
def test_interpolation_properties(coeffs, extra, data):
    p = Polynomial(coeffs)
    deg = p.degree
    xs = data.draw(
        st.lists(st.integers(-30, 30), min_size=deg + 1 + extra, max_size=deg + 1 + extra, unique=True)
    )
    pts = [(x, p(x)) for x in xs]
    assert interpolate(pts[: deg + 1], deg) == p
    assert interpolate(pts, deg) == p
    i = data.draw(st.integers(0, len(pts) - 1))
    bumped = list(pts)
    bumped[i] = (pts[i][0], pts[i][1] + 1)
    with pytest.raises((NonIntegral, Overdetermined)):
        interpolate(bumped, deg)


def test_text_rendering():
    assert to_text(P([-2, 1, 1])) == "q^2 + q - 2"
    assert to_text(P([1, 2])) == "2q + 1"
    assert to_text(P([0, -1])) == "-q"
    assert to_text(ZERO) == "0"
    assert to_latex(P([0] * 14 + [1])) == "q^{14}"


@given(polys)
def test_text_and_latex_parse_round_trip(p):
    assert parse(to_text(p)) == p
    assert parse(to_latex(p)) == p


def test_parse_published_spacing():
    assert parse("760q^ {17} - 869q^{16}") == P([0] * 16 + [-869, 760])
    assert parse("-q") == -Q
    with pytest.raises(ValueError):
        parse("q +")
    with pytest.raises(ValueError):
        parse("x^2")


def test_json_format():
    assert to_json(P([-2, 1, 1])) == '{"var":"q","coeffs":[-2,1,1]}'
    big = P([2**70, -(2**64), 1])
    obj = json.loads(to_json(big))
    assert obj["coeffs"] == [str(2**70), str(-(2**64)), 1]
    assert from_json(to_json(big)) == big


@given(polys)
def test_json_round_trip(p):
    assert from_json(to_json(p)) == p


def test_gcd():
    a = (Q - 1) * (Q + 2)
    b = (Q - 1) ** 2 * (Q + 1)
    assert gcd(a, b) == Q - 1
    assert gcd(P([2, 2]), P([4, 4])) == Q + 1
    assert gcd(a, ZERO) == a


def test_immutable_and_hashable():
    p = P([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert {p: 1}[P([1, 2])] == 1
    assert p == P([1, 2, 0])
    assert P([4]) == 4
