"""Group-order polynomials and class-count assembly for GL_n, PGL_n, SL_3.

The number of ``U``-conjugacy classes in ``G`` for the unipotent radical ``U``
of a parabolic ``P = L ⋉ U`` is ``|L| * sum_pi f(pi, d)``, the sum running over
all unipotent classes of ``G`` (classes missing ``U`` contribute zero).
"""

from __future__ import annotations

from enum import Enum
from math import gcd as igcd
from typing import Sequence

from flagpoly.errors import InvalidInput
from flagpoly.flagcount import dims_from_blocks, f_count
from flagpoly.polyring import ONE, ZERO, Polynomial, Q, exact_div, gcd, primitive_part
from flagpoly.qcombinatorics import Partition, partitions


class Flavor(str, Enum):
    GL = "gl"
    PGL = "pgl"
    SL = "sl"

    @classmethod
    def parse(cls, value) -> Flavor:
        if isinstance(value, Flavor):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidInput(f"unknown group flavor {value!r}") from None


def check_blocks(n: int, blocks: Sequence[int]) -> tuple[int, ...]:
    blocks = tuple(int(a) for a in blocks)
    if not blocks or any(a <= 0 for a in blocks):
        raise InvalidInput(f"blocks must be positive: {blocks}")
    if sum(blocks) != n:
        raise InvalidInput(f"blocks {blocks} do not sum to n = {n}")
    return blocks


def gl_order(k: int) -> Polynomial:
    """``|GL_k(q)| = prod_{i<k} (q^k - q^i)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = ONE
    for i in range(k):
        out = out * (Polynomial.monomial(k) - Polynomial.monomial(i))
    return out


def levi_order(blocks: Sequence[int], flavor="gl") -> Polynomial:
    flavor = Flavor.parse(flavor)
    out = ONE
    for a in blocks:
        out = out * gl_order(a)
    if flavor is Flavor.PGL:
        out = exact_div(out, Q - 1)
    elif flavor is Flavor.SL:
        raise InvalidInput("SL Levi orders are not supported; use k_sl3")
    return out


def radical_exponent(blocks: Sequence[int]) -> int:
    """``dim U = (n^2 - sum a_i^2) / 2``."""
    n = sum(blocks)
    return (n * n - sum(a * a for a in blocks)) // 2


def f_sum(n: int, blocks: Sequence[int], cache: dict | None = None) -> Polynomial:
    """``sum_{pi ⊢ n} f(pi, d)`` for the shape given by ``blocks``."""
    d = dims_from_blocks(check_blocks(n, blocks))
    cache = {} if cache is None else cache
    total = ZERO
    for pi in partitions(n):
        total = total + f_count(pi, d, cache)
    return total


def k_poly(n: int, blocks: Sequence[int], flavor="gl", cache: dict | None = None) -> Polynomial:
    """Number of ``U(q)``-conjugacy classes of ``GL_n(q)`` or ``PGL_n(q)``."""
    blocks = check_blocks(n, blocks)
    return levi_order(blocks, flavor) * f_sum(n, blocks, cache)


def k_sl3(congruence) -> Polynomial:
    """``k(U_3(q), SL_3(q))``.  ``congruence`` is ``1`` for ``q ≡ 1 mod 3``
    (the regular class splits into three), anything else otherwise."""
    regular_classes = 3 if congruence in (1, "1") else 1
    d = (1, 2, 3)
    per_class = {
        Partition.of(3): regular_classes,
        Partition.of(2, 1): 1,
        Partition.of(1, 1, 1): 1,
    }
    total = ZERO
    for pi, mult in per_class.items():
        total = total + mult * f_count(pi, d)
    return (Q - 1) ** 2 * total


def sl3_congruence(q: int) -> int | str:
    return 1 if q % 3 == 1 else "other"


def commuting_count_poly(n: int, blocks: Sequence[int], flavor="gl") -> Polynomial:
    """Number of commuting pairs in ``U(q) x G(q)``: ``q^dim U * k``."""
    blocks = check_blocks(n, blocks)
    return Polynomial.monomial(radical_exponent(blocks)) * k_poly(n, blocks, flavor)


def parabolic_order(blocks: Sequence[int]) -> Polynomial:
    return Polynomial.monomial(radical_exponent(blocks)) * levi_order(blocks, "gl")


def fixed_point_ratio(pi, blocks: Sequence[int]) -> tuple[Polynomial, Polynomial]:
    """Fraction of conjugates of ``U`` containing a unipotent of type ``pi``,
    as a reduced pair ``(numerator, denominator)``.

    Both entries have integer coefficients, the pair has no common factor
    over Q[q] and no common integer content, and the denominator has
    positive leading coefficient.
    """
    pi = pi if isinstance(pi, Partition) else Partition(tuple(pi))
    blocks = check_blocks(pi.n, blocks)
    num = parabolic_order(blocks) * f_count(pi, dims_from_blocks(blocks))
    den = gl_order(pi.n)
    return reduce_fraction(num, den)


def reduce_fraction(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    g = gcd(num, den)
    num, den = exact_div(num, g), exact_div(den, g)
    cn, cd = primitive_part(num), primitive_part(den)
    # remaining scalar factor num/den = (sn * cn) / (sd * cd)
    sn, sd = num.leading // cn.leading, den.leading // cd.leading
    h = igcd(sn, sd)
    sn, sd = sn // h, sd // h
    if sd < 0:
        sn, sd = -sn, -sd
    return sn * cn, sd * cd
