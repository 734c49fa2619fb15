"""Linear algebra over a prime field F_p.

Vectors are tuples of ints in ``range(p)``; matrices are tuples of row
tuples acting on column vectors.  Subspaces are kept as reduced row echelon
bases, which are canonical: two subspaces are equal iff their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from flagpoly.errors import NotNilpotent
from flagpoly.qcombinatorics import Partition

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


def check_prime(p: int) -> int:
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return p


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a
    )


def mat_vec(a: Matrix, v: Sequence[int], p: int) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def mat_sub(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(tuple((x - y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_add(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_pow(a: Matrix, k: int, p: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a, p)
    return out


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(a: Matrix, p: int) -> Matrix:
    """Basis (as rows) of ``{x : a x = 0}``."""
    if not a:
        return ()
    ncols = len(a[0])
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(red, pivots):
            x[pc] = (-row[fc]) % p
        basis.append(tuple(x))
    return tuple(basis)


def mat_inv(a: Matrix, p: int) -> Matrix:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, p)
    if pivots[:n] != tuple(range(n)) or len(pivots) != n:
        raise ZeroDivisionError("matrix is singular mod p")
    return tuple(tuple(row[n:]) for row in red)


def det(a: Matrix, p: int) -> int:
    m = [list(r) for r in a]
    n = len(m)
    d = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            d = -d
        d = d * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for i in range(col + 1, n):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[col])]
    return d % p


# subspaces -----------------------------------------------------------------


@dataclass(frozen=True)
class EchelonSubspace:
    """Subspace of F_p^n given by its canonical reduced echelon basis."""

    n: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, n: int, rows: Sequence[Sequence[int]], p: int) -> EchelonSubspace:
        basis, pivots = rref(rows, p) if rows else ((), ())
        return cls(n, basis, pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[int], p: int) -> Vector:
        """Residue of ``v`` after clearing the pivot coordinates."""
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = v[pc]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v: Sequence[int], p: int) -> bool:
        return not any(self.reduce(v, p))

    def complement_coords(self) -> tuple[int, ...]:
        """Non-pivot coordinates; the matching unit vectors span a complement."""
        return tuple(c for c in range(self.n) if c not in self.pivots)


def enumerate_echelon(n: int, k: int, p: int) -> Iterator[Matrix]:
    """Every reduced echelon ``k x n`` matrix of rank ``k``, each exactly once."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(n), k):
        free = [
            (i, c)
            for i, pc in enumerate(pivots)
            for c in range(pc + 1, n)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), x in zip(free, values):
                rows[i][c] = x
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(n: int, k: int, p: int) -> Iterator[EchelonSubspace]:
    for basis in enumerate_echelon(n, k, p):
        pivots = tuple(row.index(1) for row in basis)
        yield EchelonSubspace(n, basis, pivots)


# nilpotent matrices ----------------------------------------------------------


def jordan_type(m: Matrix, p: int) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = len(m)
    ranks = [n]
    power = identity(n)
    for _ in range(n):
        power = mat_mul(power, m, p)
        ranks.append(rank(power, p))
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent")
    # blocks of size >= j: ranks[j-1] - ranks[j]
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, n + 1)] + [0]
    mult = [at_least[j] - at_least[j + 1] for j in range(n)]
    return Partition.from_multiplicities(mult)


def nilpotent_of_type(pi: Partition | Sequence[int]) -> Matrix:
    """Block diagonal nilpotent in Jordan form, ones on the superdiagonal."""
    pi = pi if isinstance(pi, Partition) else Partition(tuple(pi))
    n = pi.n
    m = [[0] * n for _ in range(n)]
    start = 0
    for size in pi.parts:
        for i in range(start, start + size - 1):
            m[i][i + 1] = 1
        start += size
    return tuple(tuple(r) for r in m)


def unipotent_of_type(pi: Partition | Sequence[int], p: int) -> Matrix:
    y = nilpotent_of_type(pi)
    return mat_add(identity(len(y)), y, p)
