from fractions import Fraction

import pytest

from flagpoly import fforacle
from flagpoly.errors import InvalidInput
from flagpoly.flagcount import dims_from_blocks
from flagpoly.grouporders import (
    commuting_count_poly,
    fixed_point_ratio,
    gl_order,
    k_poly,
    k_sl3,
    levi_order,
    radical_exponent,
    sl3_congruence,
)
from flagpoly.polyring import ONE, Polynomial, Q, exact_div
from flagpoly.qcombinatorics import compositions, partitions


def test_gl_order():
    assert gl_order(0) == ONE
    assert gl_order(1) == Q - 1
    assert gl_order(2) == Polynomial([0, 1, -1, -1, 1])
    assert gl_order(2)(2) == 6
    assert gl_order(3)(2) == 168
    for n in range(1, 4):
        for p in (2, 3):
            assert gl_order(n)(p) == fforacle.gl_order_int(n, p)


def test_gl3_order_by_enumeration():
    from flagpoly.fforacle.groups import gl_elements

    assert len(gl_elements(3, 2)) == gl_order(3)(2)
    assert len(gl_elements(2, 3)) == gl_order(2)(3)


def test_levi_order():
    assert levi_order((1, 1), "gl") == (Q - 1) ** 2
    assert levi_order((1, 1, 1), "pgl") == (Q - 1) ** 2
    assert levi_order((3,), "gl") == gl_order(3)
    with pytest.raises(InvalidInput):
        levi_order((1, 1), "sl")
    with pytest.raises(InvalidInput):
        levi_order((1, 1), "sp")


def test_radical_exponent():
    for n in range(1, 8):
        assert radical_exponent((1,) * n) == n * (n - 1) // 2
        assert radical_exponent((n,)) == 0
        for blocks in compositions(n):
            assert radical_exponent(blocks) == len(
                fforacle.groups.radical_positions(blocks)
            )
    assert radical_exponent((1, 2)) == 2


def test_k_poly_examples():
    assert k_poly(2, (1, 1), "pgl") == Polynomial([-2, 1, 1])
    assert k_poly(3, (1, 1, 1), "pgl") == Polynomial([3, -2, -3, 1, 0, 1])
    for n in range(1, 7):
        assert k_poly(n, (n,), "gl") == gl_order(n)
    with pytest.raises(InvalidInput):
        k_poly(3, (1, 1), "gl")


def test_k_sl3():
    assert k_sl3(1) == Polynomial([5, -6, -1, 1, 0, 1])
    assert k_sl3("other") == Polynomial([3, -2, -3, 1, 0, 1])
    assert k_sl3("other")(2) == 27
    assert sl3_congruence(7) == 1
    assert sl3_congruence(5) == sl3_congruence(3) == "other"


def test_commuting_count():
    c = commuting_count_poly(2, (1, 1), "gl")
    assert c == Polynomial([0, 2, -3, 0, 1])
    assert c(3) == 60
    for n in range(1, 5):
        assert commuting_count_poly(n, (n,), "gl") == gl_order(n)


@pytest.mark.parametrize("n,blocks,p", [(2, (1, 1), 2), (2, (1, 1), 3), (3, (1, 2), 2), (3, (1, 1, 1), 3)])
def test_commuting_count_matches_burnside_sum(n, blocks, p):
    total, _ = fforacle.burnside_sum(n, blocks, p, "gl")
    assert commuting_count_poly(n, blocks, "gl")(p) == total


def test_fixed_point_ratio_examples():
    num, den = fixed_point_ratio((3,), (1, 1, 1))
    assert Fraction(num(5), den(5)) == Fraction(
        ((Q - 1) ** 3 * Q**3)(5), gl_order(3)(5)
    )
    assert fixed_point_ratio((1, 1), (1, 1)) == (ONE, ONE)
    num, den = fixed_point_ratio((2,), (1, 1))
    assert (num, den) == (ONE, Q + 1)
    assert Fraction(num(2), den(2)) == Fraction(1, 3)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_fixed_point_ratio_matches_oracle(n, p):
    for blocks in compositions(n):
        d = dims_from_blocks(blocks)
        # every radical contains the identity, so this counts all flags
        flags = fforacle.oracle_f_radical(fforacle.identity(n), d, p)
        parabolic = levi_order(blocks) * Polynomial.monomial(radical_exponent(blocks))
        assert flags == exact_div(gl_order(n), parabolic)(p)
        for pi in partitions(n):
            num, den = fixed_point_ratio(pi, blocks)
            count = fforacle.oracle_f_radical(fforacle.unipotent_of_type(pi, p), d, p)
            assert Fraction(num(p), den(p)) == Fraction(count, flags)
            assert den.leading > 0


@pytest.mark.parametrize("n", range(2, 8))
def test_gl_equals_q_minus_1_times_pgl_all_shapes(n):
    for blocks in compositions(n):
        assert k_poly(n, blocks, "gl") == (Q - 1) * k_poly(n, blocks, "pgl")
