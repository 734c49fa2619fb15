"""Exhaustive flag and subspace counts over F_p."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Sequence

from flagpoly.errors import ConstantTermViolation, InvalidInput
from flagpoly.fforacle.budget import check_budget
from flagpoly.fforacle.linalg import (
    EchelonSubspace,
    Matrix,
    enumerate_echelon,
    identity,
    jordan_type,
    mat_sub,
    mat_vec,
    nullspace,
    unipotent_of_type,
)
from flagpoly.polyring import Polynomial, interpolate
from flagpoly.qcombinatorics import Partition


def _gaussian_count(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def _extensions(
    current: EchelonSubspace, k: int, p: int
) -> list[EchelonSubspace]:
    """All subspaces containing ``current`` with ``k`` more dimensions."""
    comp = current.complement_coords()
    n = current.n
    out = []
    for coords in enumerate_echelon(len(comp), k, p):
        rows = list(current.basis)
        for c in coords:
            v = [0] * n
            for pos, x in zip(comp, c):
                v[pos] = x
            rows.append(tuple(v))
        out.append(EchelonSubspace.span(n, rows, p))
    return out


def _count_flags(
    y: Matrix, d: Sequence[int], p: int, admissible: Callable[[EchelonSubspace, EchelonSubspace], bool]
) -> int:
    n = len(y)
    d = tuple(d)
    if not d or d[-1] != n or d[0] <= 0 or any(a >= b for a, b in zip(d, d[1:])):
        raise InvalidInput(f"bad dimension vector {d} for n = {n}")
    total_flags = 1
    prev = 0
    for di in d:
        total_flags *= _gaussian_count(n - prev, di - prev, p)
        prev = di
    check_budget(total_flags, "flag enumeration")

    def walk(level: int, current: EchelonSubspace) -> int:
        if level == len(d):
            return 1
        found = 0
        for nxt in _extensions(current, d[level] - current.dim, p):
            if admissible(current, nxt):
                found += walk(level + 1, nxt)
        return found

    return walk(0, EchelonSubspace(n, (), ()))


def oracle_f_radical(u: Matrix, d: Sequence[int], p: int) -> int:
    """Flags ``V_1 ⊂ ... ⊂ V_r`` with ``(u - 1) V_i ⊆ V_{i-1}``."""
    y = mat_sub(u, identity(len(u)), p)

    def ok(prev: EchelonSubspace, nxt: EchelonSubspace) -> bool:
        return all(prev.contains(mat_vec(y, v, p), p) for v in nxt.basis)

    return _count_flags(y, d, p, ok)


def oracle_f_parabolic(u: Matrix, d: Sequence[int], p: int) -> int:
    """Flags of dimension vector ``d`` stabilised by ``u``."""
    y = mat_sub(u, identity(len(u)), p)

    def ok(prev: EchelonSubspace, nxt: EchelonSubspace) -> bool:
        return all(nxt.contains(mat_vec(y, v, p), p) for v in nxt.basis)

    return _count_flags(y, d, p, ok)


def quotient_map(y: Matrix, w: EchelonSubspace, p: int) -> Matrix:
    """Matrix of the map induced by ``y`` on ``F_p^n / W`` (``y(W) ⊆ W``)."""
    comp = w.complement_coords()
    cols = []
    for j in comp:
        e = [0] * len(y)
        e[j] = 1
        image = w.reduce(mat_vec(y, e, p), p)
        cols.append([image[c] for c in comp])
    return tuple(tuple(cols[j][i] for j in range(len(comp))) for i in range(len(comp)))


def oracle_w(u: Matrix, c: int, p: int) -> dict[Partition, int]:
    """Tally of quotient Jordan types over all ``c``-dimensional ``W`` inside
    ``ker(u - 1)``."""
    n = len(u)
    y = mat_sub(u, identity(n), p)
    kernel = nullspace(y, p)
    check_budget(_gaussian_count(len(kernel), c, p), "kernel subspace enumeration")
    tally: Counter = Counter()
    for coords in enumerate_echelon(len(kernel), c, p):
        rows = [
            tuple(sum(a * kv[i] for a, kv in zip(cf, kernel)) % p for i in range(n))
            for cf in coords
        ]
        w = EchelonSubspace.span(n, rows, p)
        q = quotient_map(y, w, p)
        tally[jordan_type(q, p) if q else Partition(())] += 1
    return dict(tally)


def interpolate_g_poly(pi, d: Sequence[int], primes: Sequence[int]) -> Polynomial:
    """Recover the polynomial counting ``u``-stable flags from oracle samples.

    The degree is at most the dimension of the flag variety, and the constant
    term must be 1.
    """
    pi = pi if isinstance(pi, Partition) else Partition(tuple(pi))
    d = tuple(d)
    blocks = [b - a for a, b in zip((0,) + d, d)]
    bound = (pi.n**2 - sum(a * a for a in blocks)) // 2
    primes = list(primes)
    if len(primes) < bound + 1:
        raise InvalidInput(f"need at least {bound + 1} primes, got {len(primes)}")
    samples = [(p, oracle_f_parabolic(unipotent_of_type(pi, p), d, p)) for p in primes]
    g = interpolate(samples, bound)
    if g[0] != 1:
        raise ConstantTermViolation(f"constant term of {g} is {g[0]}, expected 1")
    return g
