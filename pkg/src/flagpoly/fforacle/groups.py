"""Brute-force group computations over F_p: centralizers, class counts via
Burnside's lemma, and a direct check of the class-count formula for
unipotent radicals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

import numpy as np

from flagpoly.errors import InvalidInput
from flagpoly.fforacle.budget import check_budget
from flagpoly.fforacle.linalg import (
    Matrix,
    det,
    identity,
    mat_inv,
    mat_mul,
    nullspace,
)

_CHUNK = 1 << 16


def gl_order_int(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def sl_order_int(n: int, p: int) -> int:
    return gl_order_int(n, p) // (p - 1)


def _normalize_flavor(flavor) -> str:
    f = str(getattr(flavor, "value", flavor)).lower()
    if f not in ("gl", "pgl", "sl"):
        raise InvalidInput(f"unknown flavor {flavor!r}")
    return f


def radical_positions(blocks: Sequence[int]) -> list[tuple[int, int]]:
    owner = [b for b, size in enumerate(blocks) for _ in range(size)]
    n = len(owner)
    return [(i, j) for i in range(n) for j in range(n) if owner[i] < owner[j]]


def radical_elements(blocks: Sequence[int], p: int) -> Iterator[Matrix]:
    """Every element of the block unitriangular group of shape ``blocks``."""
    n = sum(blocks)
    pos = radical_positions(blocks)
    check_budget(p ** len(pos), "radical enumeration")
    for values in product(range(p), repeat=len(pos)):
        m = [list(r) for r in identity(n)]
        for (i, j), x in zip(pos, values):
            m[i][j] = x
        yield tuple(tuple(r) for r in m)


def commutant_basis(v: Matrix, p: int) -> Matrix:
    """Basis of ``{X : vX = Xv}``, each ``X`` flattened row-major."""
    n = len(v)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + j] += v[i][k]
                row[i * n + k] -= v[k][j]
            rows.append(tuple(x % p for x in row))
    return nullspace(tuple(rows), p)


@lru_cache(maxsize=None)
def _leibniz(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def _det_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod ``p`` of a stack of ``n x n`` integer matrices."""
    n = mats.shape[1]
    total = np.zeros(mats.shape[0], dtype=np.int64)
    for perm, sign in _leibniz(n):
        term = np.ones(mats.shape[0], dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * mats[:, i, j] % p
        total = (total + sign * term) % p
    return total


def count_commutant_units(v: Matrix, p: int, det_one: bool = False) -> int:
    """Invertible (or determinant-1) matrices commuting with ``v``."""
    n = len(v)
    basis = np.array(commutant_basis(v, p), dtype=np.int64)
    k = basis.shape[0]
    size = p**k
    check_budget(size, "commutant enumeration")
    weights = p ** np.arange(k, dtype=np.int64)
    count = 0
    for start in range(0, size, _CHUNK):
        idx = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
        coeffs = (idx[:, None] // weights[None, :]) % p
        elems = (coeffs @ basis % p).reshape(-1, n, n)
        d = _det_mod_p(elems, p)
        count += int(np.count_nonzero(d == 1 if det_one else d != 0))
    return count


def centralizer_order(v: Matrix, p: int, flavor="gl") -> int:
    """``|C_G(v)|`` for ``G = GL_n(p)`` or ``SL_n(p)``."""
    flavor = _normalize_flavor(flavor)
    if flavor == "pgl":
        raise InvalidInput("use oracle_k for PGL; centralizers are taken in GL or SL")
    n = len(v)
    if v == identity(n):
        return gl_order_int(n, p) if flavor == "gl" else sl_order_int(n, p)
    return count_commutant_units(v, p, det_one=(flavor == "sl"))


def burnside_sum(n: int, blocks: Sequence[int], p: int, flavor="gl") -> tuple[int, int]:
    """``(sum_{v in U} |C_G(v)|, |U|)``.

    For PGL each term is ``|C_GL(v)| / (p - 1)``: a scalar commutator
    ``g v g^-1 = λ v`` forces ``λ = 1`` because ``v`` is unipotent.
    """
    flavor = _normalize_flavor(flavor)
    if sum(blocks) != n:
        raise InvalidInput(f"blocks {tuple(blocks)} do not sum to {n}")
    total = 0
    size = 0
    for v in radical_elements(blocks, p):
        if flavor == "pgl":
            c, rem = divmod(centralizer_order(v, p, "gl"), p - 1)
            if rem:
                raise ArithmeticError("GL centralizer order not divisible by p - 1")
        else:
            c = centralizer_order(v, p, flavor)
        total += c
        size += 1
    return total, size


def oracle_k(n: int, blocks: Sequence[int], p: int, flavor="gl") -> int:
    """Number of ``U``-conjugacy classes in ``G`` by Burnside's lemma."""
    total, size = burnside_sum(n, blocks, p, flavor)
    k, rem = divmod(total, size)
    if rem:
        raise ArithmeticError(f"Burnside sum {total} not divisible by |U| = {size}")
    return k


# direct check of the class-count formula ---------------------------------------


def gl_elements(n: int, p: int) -> list[Matrix]:
    check_budget(p ** (n * n), "GL enumeration")
    out = []
    for values in product(range(p), repeat=n * n):
        m = tuple(tuple(values[i * n:(i + 1) * n]) for i in range(n))
        if det(m, p):
            out.append(m)
    return out


def verify_lemma1(n: int, p: int, blocks: Sequence[int] | None = None) -> dict:
    """Compare the number of ``U``-orbits on ``GL_n(p)`` (by conjugation)
    against ``|N_G(U)| / |U| * sum_x f(x)``, where ``x`` runs over
    representatives of all ``G``-classes and ``f(x)`` is the number of
    ``G``-conjugates of ``U`` containing ``x``.  Everything is enumerated."""
    blocks = tuple(blocks) if blocks is not None else (1,) * n
    if sum(blocks) != n:
        raise InvalidInput(f"blocks {blocks} do not sum to {n}")
    group = gl_elements(n, p)
    inverse = {g: mat_inv(g, p) for g in group}
    radical = frozenset(radical_elements(blocks, p))

    def conj(g: Matrix, x: Matrix) -> Matrix:
        return mat_mul(mat_mul(g, x, p), inverse[g], p)

    # left side: orbit partition of G under U-conjugation
    seen: set = set()
    orbits = 0
    for g in group:
        if g in seen:
            continue
        orbits += 1
        seen.update(conj(u, g) for u in radical)

    # right side
    conjugates = set()
    normalizer = 0
    for g in group:
        c = frozenset(conj(g, u) for u in radical)
        conjugates.add(c)
        if c == radical:
            normalizer += 1
    seen = set()
    f_total = 0
    classes = 0
    for x in group:
        if x in seen:
            continue
        classes += 1
        seen.update(conj(g, x) for g in group)
        f_total += sum(1 for c in conjugates if x in c)
    rhs = Fraction(normalizer, len(radical)) * f_total

    return {
        "check": "lemma1",
        "parameters": {"n": n, "p": p, "blocks": list(blocks)},
        "symbolic": int(rhs) if rhs.denominator == 1 else str(rhs),
        "oracle": orbits,
        "equal": rhs == orbits,
        "normalizer_order": normalizer,
        "radical_order": len(radical),
        "class_count": classes,
    }
