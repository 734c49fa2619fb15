"""Counting flags adapted to a unipotent element of GL_n.

For a unipotent ``x`` of Jordan type ``pi`` with nilpotent part ``y = x - 1``,
``f_count(pi, d)`` is the number of flags ``0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_r = V``
with ``dim V_i = d_i`` and ``y(V_i) ⊆ V_{i-1}``, i.e. the number of conjugates
of the unipotent radical of shape ``d`` that contain ``x``.  It is computed by
peeling off ``V_1``: a ``d_1``-dimensional subspace ``W`` of ``ker y``, after
which the problem repeats on ``V / W`` with the induced Jordan type.

The number of ``W ⊆ ker y`` giving a prescribed quotient type is fixed by how
``W`` meets the kernel filtration ``J_j = ker y ∩ im y^j``: a vector lying in
``J_{j-1}`` but not in ``J_j`` shortens one block of size ``j`` by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from flagpoly.errors import InvalidInput
from flagpoly.polyring import ONE, ZERO, Polynomial
from flagpoly.qcombinatorics import (
    Partition,
    count_flag_profile_subspaces,
    partitions,
)


def as_partition(pi) -> Partition:
    return pi if isinstance(pi, Partition) else Partition(tuple(pi))


def dims_from_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    out, acc = [], 0
    for a in blocks:
        if a <= 0:
            raise InvalidInput(f"block sizes must be positive: {tuple(blocks)}")
        acc += a
        out.append(acc)
    return tuple(out)


def blocks_from_dims(d: Sequence[int]) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip((0,) + tuple(d), d))


def borel_dims(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def kernel_filtration(pi) -> tuple[int, ...]:
    """``dims[j] = dim(ker y ∩ im y^j)`` for ``j = 0..largest part``."""
    pi = as_partition(pi)
    return tuple(sum(1 for x in pi.parts if x > j) for j in range(pi.largest + 1))


@dataclass(frozen=True)
class RemovalProfile:
    """Transition data for passing from type ``pi`` to a quotient type.

    ``b[i - 1]`` is the number of blocks shrinking from size ``i`` to
    ``i - 1``; ``c[i]`` is the required ``dim(W ∩ J_i)``, so ``c[0]`` is
    ``dim W``.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def c_dim(self) -> int:
        return self.c[0]


def removal_profile(pi, pi2) -> RemovalProfile | None:
    """Profile for ``pi -> pi2``, or ``None`` when no subspace of ``ker y``
    can realise the transition."""
    pi, pi2 = as_partition(pi), as_partition(pi2)
    n = pi.n
    if pi2.n > n:
        return None
    diff = [pi.mult(j) - pi2.mult(j) for j in range(n + 1)]
    diff += [-pi2.mult(j) for j in range(n + 1, pi2.largest + 1)]
    b = [sum(diff[i:]) for i in range(1, n + 1)]
    c = [sum(b[i:]) for i in range(n + 1)]
    if any(x < 0 for x in b) or any(x < 0 for x in diff[n + 1:]):
        return None
    jd = kernel_filtration(pi)
    for i, ci in enumerate(c):
        if ci > (jd[i] if i < len(jd) else 0):
            return None
    return RemovalProfile(tuple(b), tuple(c))


def w_count(pi, pi2) -> Polynomial:
    """Number of ``W ⊆ ker y`` with ``dim W = |pi| - |pi2|`` and the map
    induced on ``V / W`` of Jordan type ``pi2``."""
    return _w_count(as_partition(pi), as_partition(pi2))


@lru_cache(maxsize=None)
def _w_count(pi: Partition, pi2: Partition) -> Polynomial:
    prof = removal_profile(pi, pi2)
    if prof is None:
        return ZERO
    jd = kernel_filtration(pi)
    # flag J_s ⊆ ... ⊆ J_0 read bottom up, s = largest - 1; equal levels merged
    dims: list[int] = []
    prof_e: list[int] = []
    for j in range(pi.largest - 1, -1, -1):
        if dims and dims[-1] == jd[j]:
            if prof_e[-1] != prof.c[j]:
                return ZERO
            continue
        dims.append(jd[j])
        prof_e.append(prof.c[j])
    return count_flag_profile_subspaces(dims, prof_e)


def _check_dims(n: int, d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d:
        if n != 0:
            raise InvalidInput("empty dimension vector for a nonempty partition")
        return d
    if d[0] <= 0 or any(a >= b for a, b in zip(d, d[1:])):
        raise InvalidInput(f"dimension vector must be strictly increasing and positive: {d}")
    if d[-1] != n:
        raise InvalidInput(f"dimension vector {d} does not end at |pi| = {n}")
    return d


def f_count(pi, d: Sequence[int], cache: dict | None = None) -> Polynomial:
    """Number of flags of dimension vector ``d`` along which ``y`` is strictly
    decreasing, for ``y`` nilpotent of type ``pi``.

    ``cache`` may be shared between calls; it maps ``(parts, dims)`` to the
    result and is only ever inserted into.
    """
    pi = as_partition(pi)
    d = _check_dims(pi.n, d)
    if cache is None:
        cache = {}
    return _f(pi, d, cache)


def _f(pi: Partition, d: tuple[int, ...], cache: dict) -> Polynomial:
    key = (pi.parts, d)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not d:
        result = ONE
    else:
        d1 = d[0]
        rest = tuple(x - d1 for x in d[1:])
        result = ZERO
        for pi2 in partitions(pi.n - d1):
            w = w_count(pi, pi2)
            if w:
                result = result + w * _f(pi2, rest, cache)
    cache[key] = result
    return result


def f_count_blocks(pi, blocks: Sequence[int], cache: dict | None = None) -> Polynomial:
    return f_count(pi, dims_from_blocks(blocks), cache)
