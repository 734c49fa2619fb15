"""Partitions, Gaussian binomials and subspace counts relative to flags."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from flagpoly.errors import DimensionMismatch
from flagpoly.polyring import ONE, ZERO, Polynomial


@dataclass(frozen=True, order=False)
class Partition:
    """A partition stored as weakly decreasing positive parts.

    ``multiplicities[i - 1]`` is the number of parts equal to ``i``, for
    ``i = 1..n``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            parts = tuple(sorted(parts, reverse=True))
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def from_multiplicities(cls, mult: Sequence[int]) -> Partition:
        parts: list[int] = []
        for size in range(len(mult), 0, -1):
            if mult[size - 1] < 0:
                raise ValueError("negative multiplicity")
            parts.extend([size] * mult[size - 1])
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def multiplicities(self) -> tuple[int, ...]:
        mult = [0] * self.n
        for x in self.parts:
            mult[x - 1] += 1
        return tuple(mult)

    def mult(self, i: int) -> int:
        """Number of parts equal to ``i`` (0 outside the valid range)."""
        return self.parts.count(i) if i >= 1 else 0

    def conjugate(self) -> Partition:
        return Partition(
            tuple(sum(1 for x in self.parts if x > j) for j in range(self.largest))
        )

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __iter__(self):
        return iter(self.parts)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order of parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _rev_lex(n, n)]


def _rev_lex(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _rev_lex(n - first, first):
            yield (first,) + rest


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of ``n >= 1`` (ordered positive block sizes)."""
    if n <= 0:
        return [()] if n == 0 else []
    out = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def gaussian_binomial(a: int, b: int) -> Polynomial:
    """The q-binomial coefficient ``[a choose b]_q``."""
    if b < 0 or a < 0 or b > a:
        return ZERO
    b = min(b, a - b)
    # row[k] holds [m choose k] as m runs up to a
    row = [ONE] + [ZERO] * b
    for m in range(1, a + 1):
        for k in range(min(m, b), 0, -1):
            row[k] = row[k - 1] + Polynomial.monomial(k) * row[k]
    return row[b]


def count_avoiding_subspaces(n: int, m: int, l: int) -> Polynomial:
    """Number of ``l``-dimensional subspaces of an ``n``-space meeting a fixed
    ``m``-dimensional subspace only in zero: ``q^(m*l) [n-m choose l]_q``."""
    if n < 0 or not 0 <= m <= n or l < 0:
        raise ValueError(f"invalid arguments s({n}, {m}, {l})")
    if l > n - m:
        return ZERO
    return Polynomial.monomial(m * l) * gaussian_binomial(n - m, l)


def profile_is_valid(d: Sequence[int], e: Sequence[int]) -> bool:
    prev_d = prev_e = 0
    for di, ei in zip(d, e):
        if ei < prev_e or ei > di or ei - prev_e > di - prev_d:
            return False
        prev_d, prev_e = di, ei
    return True


def count_flag_profile_subspaces(d: Sequence[int], e: Sequence[int]) -> Polynomial:
    """Number of subspaces ``U`` of ``V_r`` with ``dim(U ∩ V_i) = e_i``, where
    ``V_1 ⊆ ... ⊆ V_r`` is a fixed flag with ``dim V_i = d_i``.

    Built level by level: given ``U ∩ V_{i-1}``, the extension to level ``i``
    is a choice of ``(e_i - e_{i-1})``-subspace of ``V_i / (U ∩ V_{i-1})``
    avoiding ``V_{i-1} / (U ∩ V_{i-1})``.
    """
    if len(d) != len(e):
        raise DimensionMismatch(f"dimension vector {tuple(d)} vs profile {tuple(e)}")
    if any(x < 0 for x in d) or any(a > b for a, b in zip(d, d[1:])):
        raise ValueError(f"not a dimension vector: {tuple(d)}")
    if not profile_is_valid(d, e):
        return ZERO
    result = ONE
    prev_d = prev_e = 0
    for di, ei in zip(d, e):
        result = result * count_avoiding_subspaces(di - prev_e, prev_d - prev_e, ei - prev_e)
        prev_d, prev_e = di, ei
    return result
