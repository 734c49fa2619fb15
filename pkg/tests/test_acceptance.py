"""Acceptance suite. Each test is one criterion; a summary line per criterion
is printed at the end of the pytest run."""

import itertools
import time

import pytest

from flagpoly import fforacle
from flagpoly.cli import table1_rows
from flagpoly.flagcount import borel_dims, dims_from_blocks, f_count, w_count
from flagpoly.grouporders import k_poly, k_sl3, sl3_congruence
from flagpoly.polyring import ONE, ZERO, Q, shift_to_qminus1_basis
from flagpoly.qcombinatorics import compositions, gaussian_binomial, partitions
from flagpoly.table1 import reference_polynomial

criterion = pytest.mark.criterion


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f}s, limit {self.limit}s"


def _permutations(blocks):
    return sorted(set(itertools.permutations(blocks)))


@criterion(1, "published PGL_n Borel class counts, n = 2..10")
def test_table1_reproduction():
    with Timer(10):
        rows = table1_rows(10)
    assert [n for n, _ in rows] == list(range(2, 11))
    for n, poly in rows:
        assert poly.coeffs == reference_polynomial(n).coeffs, n
    assert rows[-1][1].degree == 54


@criterion(2, "Borel f-values in GL_3")
def test_borel_f_values_gl3():
    d = borel_dims(3)
    assert f_count((3,), d) == ONE
    assert f_count((2, 1), d) == 2 * Q + 1
    assert f_count((1, 1, 1), d) == (Q**2 + Q + 1) * (Q + 1)


@criterion(3, "subregular law (n-1)q + 1, n = 2..10")
def test_subregular_law():
    for n in range(2, 11):
        assert f_count((n - 1, 1), borel_dims(n)) == (n - 1) * Q + 1


@criterion(4, "GL = (q-1) PGL for the Borel, n = 2..10")
def test_gl_pgl_factor():
    cache: dict = {}
    for n in range(2, 11):
        assert k_poly(n, (1,) * n, "gl", cache) == (Q - 1) * k_poly(n, (1,) * n, "pgl", cache)


@criterion(5, "f_count = radical-flag oracle, n <= 4 at p = 2,3,5 and n <= 3 at p = 7")
def test_f_oracle_equality():
    cases = [(n, p) for n in range(1, 5) for p in (2, 3, 5)] + [(n, 7) for n in range(1, 4)]
    with Timer(60):
        for n, p in cases:
            for blocks in compositions(n):
                d = dims_from_blocks(blocks)
                for pi in partitions(n):
                    got = fforacle.oracle_f_radical(fforacle.unipotent_of_type(pi, p), d, p)
                    assert f_count(pi, d)(p) == got, (pi, blocks, p)


@criterion(6, "k_poly = Burnside oracle, n <= 3 at p = 2,3,5,7 and the n = 4 Borel at p = 2")
def test_k_oracle_equality():
    with Timer(300):
        for n in range(1, 4):
            for blocks in compositions(n):
                for p in (2, 3, 5, 7):
                    for flavor in ("gl", "pgl"):
                        assert k_poly(n, blocks, flavor)(p) == fforacle.oracle_k(n, blocks, p, flavor), (
                            blocks, p, flavor,
                        )
        assert reference_polynomial(4)(2) == 389
        assert fforacle.oracle_k(4, (1, 1, 1, 1), 2, "pgl") == 389
        assert fforacle.oracle_k(4, (1, 1, 1, 1), 2, "gl") == 389


@criterion(7, "SL_3 congruence split at p = 2,3,5,7")
def test_sl3_split():
    with Timer(120):
        for p in (2, 3, 5):
            assert sl3_congruence(p) == "other"
            assert k_sl3("other")(p) == fforacle.oracle_k(3, (1, 1, 1), p, "sl")
        assert sl3_congruence(7) == 1
        assert k_sl3(1)(7) == fforacle.oracle_k(3, (1, 1, 1), 7, "sl")
        assert k_sl3(1) == Q**5 + Q**3 - Q**2 - 6 * Q + 5


@criterion(8, "conservation of removal counts, |pi| <= 8")
def test_conservation():
    for n in range(0, 9):
        for pi in partitions(n):
            for c in range(pi.length + 1):
                total = ZERO
                for pi2 in partitions(n - c):
                    total = total + w_count(pi, pi2)
                assert total == gaussian_binomial(pi.length, c), (pi, c)


@criterion(9, "invariance under block permutation, n <= 6")
def test_block_permutation_invariance():
    cache: dict = {}
    for n in range(1, 7):
        for blocks in compositions(n):
            perms = _permutations(blocks)
            for flavor in ("gl", "pgl"):
                values = {k_poly(n, b, flavor, cache) for b in perms}
                assert len(values) == 1, (blocks, flavor)
            for pi in partitions(n):
                values = {f_count(pi, dims_from_blocks(b), cache) for b in perms}
                assert len(values) == 1, (pi, blocks)


def _shapes():
    for n in range(1, 11):
        yield n, (1,) * n
    for n in range(1, 7):
        for blocks in compositions(n):
            yield n, blocks


@criterion(10, "nonnegative coefficients of f")
def test_nonnegativity():
    cache: dict = {}
    for n, blocks in _shapes():
        d = dims_from_blocks(blocks)
        for pi in partitions(n):
            assert all(c >= 0 for c in f_count(pi, d, cache).coeffs), (pi, blocks)


@criterion(11, "k_poly has nonnegative coefficients in powers of q - 1")
def test_qminus1_positivity():
    cache: dict = {}
    for n, blocks in _shapes():
        for flavor in ("gl", "pgl"):
            shifted = shift_to_qminus1_basis(k_poly(n, blocks, flavor, cache))
            assert all(c >= 0 for c in shifted), (blocks, flavor, shifted)


@criterion(12, "class-count identity by enumeration on GL_2(2), GL_2(3), GL_3(2)")
def test_class_count_identity_by_enumeration():
    with Timer(60):
        for n, p in [(2, 2), (2, 3), (3, 2)]:
            out = fforacle.verify_lemma1(n, p)
            assert out["equal"], out
            assert out["oracle"] == k_poly(n, (1,) * n, "gl")(p)


@criterion(13, "stable-flag polynomial recovered by interpolation, n <= 3")
def test_g_recovery():
    primes = [2, 3, 5, 7]
    for n in range(1, 4):
        d = borel_dims(n)
        for pi in partitions(n):
            g = fforacle.interpolate_g_poly(pi, d, primes)
            assert g(0) == 1
            u = fforacle.unipotent_of_type(pi, 11)
            assert g(11) == fforacle.oracle_f_parabolic(u, d, 11), pi
