"""Dense univariate polynomials with unbounded integer coefficients.

Every count in this package is a polynomial in the field size ``q``.  The
:class:`Polynomial` type keeps coefficients in increasing degree order with
trailing zeros stripped, so two polynomials are equal iff their coefficient
tuples are equal.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from flagpoly.errors import NonIntegral, NotDivisible, Overdetermined

NEG_INF = float("-inf")

_INT64_MAX = 2**63 - 1


class Polynomial:
    """Immutable polynomial in one variable over the integers.

    >>> p = Polynomial([-2, 1, 1])
    >>> str(p)
    'q^2 + q - 2'
    >>> p(3)
    10
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def q(cls) -> Polynomial:
        return cls([0, 1])

    # basic properties ---------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return to_text(self)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __floordiv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    def __call__(self, x):
        return evaluate(self, x)


def _coerce(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial([x])
    return None


ZERO = Polynomial()
ONE = Polynomial([1])
Q = Polynomial([0, 1])


def add(p: Polynomial, r: Polynomial) -> Polynomial:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial(out)


def mul(p: Polynomial, r: Polynomial) -> Polynomial:
    a, b = p.coeffs, r.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return Polynomial(out)


def divmod_poly(p: Polynomial, r: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Integer long division.  Raises NotDivisible when a quotient
    coefficient would be fractional (the leading coefficient of ``r`` does
    not divide the running remainder)."""
    if r.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dr = len(r.coeffs) - 1
    lead = r.coeffs[-1]
    if len(rem) - 1 < dr:
        return ZERO, p
    quot = [0] * (len(rem) - dr)
    for k in range(len(rem) - 1, dr - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t, m = divmod(c, lead)
        if m:
            raise NotDivisible(f"{p} is not divisible by {r} over the integers")
        quot[k - dr] = t
        for j, y in enumerate(r.coeffs):
            rem[k - dr + j] -= t * y
    return Polynomial(quot), Polynomial(rem)


def exact_div(p: Polynomial, r: Polynomial) -> Polynomial:
    """Return ``s`` with ``r * s == p``; raise NotDivisible otherwise."""
    quot, rem = divmod_poly(p, r)
    if rem:
        raise NotDivisible(f"{p} is not divisible by {r} (remainder {rem})")
    return quot


def evaluate(p: Polynomial, x):
    """Horner evaluation.  Exact for ``int`` and ``Fraction`` arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def shift_to_qminus1_basis(p: Polynomial) -> tuple[int, ...]:
    """Coefficients ``(c_0, ..., c_d)`` with ``p = sum c_i (q-1)^i``."""
    a = p.coeffs
    return tuple(
        sum(a[i] * comb(i, k) for i in range(k, len(a))) for k in range(len(a))
    )


def from_qminus1_basis(c: Sequence[int]) -> Polynomial:
    out = ZERO
    base = Polynomial([-1, 1])
    for ci in reversed(c):
        out = out * base + ci
    return out


def interpolate(points: Sequence[tuple[int, int]], degree_bound: int) -> Polynomial:
    """Integer polynomial of degree <= ``degree_bound`` through ``points``.

    The first ``degree_bound + 1`` points determine the candidate via Newton
    divided differences over the rationals; any remaining points are checked
    against it.
    """
    pts = [(int(x), int(y)) for x, y in points]
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    if len(pts) < degree_bound + 1:
        raise ValueError(
            f"need at least {degree_bound + 1} points, got {len(pts)}"
        )
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")

    base = pts[: degree_bound + 1]
    bx = [x for x, _ in base]
    table = [Fraction(y) for _, y in base]
    newton = [table[0]]
    for level in range(1, len(base)):
        table = [
            (table[i + 1] - table[i]) / (bx[i + level] - bx[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])

    # expand the Newton form into monomial coefficients
    coeffs = [Fraction(0)]
    for k in range(len(newton) - 1, -1, -1):
        # coeffs <- coeffs * (q - bx[k]) + newton[k]
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= bx[k] * c
        shifted[0] += newton[k]
        coeffs = shifted

    bad = [c for c in coeffs if c.denominator != 1]
    if bad:
        raise NonIntegral(f"interpolated coefficient {bad[0]} is not an integer")
    result = Polynomial(int(c) for c in coeffs)
    for x, y in pts[degree_bound + 1:]:
        if result(x) != y:
            raise Overdetermined(
                f"point ({x}, {y}) is off the interpolant (value {result(x)})"
            )
    return result


# gcd and content, used for reduced rational functions -----------------------


def content(p: Polynomial) -> int:
    g = 0
    for c in p.coeffs:
        g = _igcd(g, c)
    return g


def _igcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def primitive_part(p: Polynomial) -> Polynomial:
    """``p`` divided by its content, with positive leading coefficient."""
    if p.is_zero():
        return p
    g = content(p)
    if p.leading < 0:
        g = -g
    return Polynomial(c // g for c in p.coeffs)


def gcd(p: Polynomial, r: Polynomial) -> Polynomial:
    """Primitive gcd over Q[q] (positive leading coefficient)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in r.coeffs]
    while b:
        # a <- a mod b
        a = list(a)
        while len(a) >= len(b):
            t = a[-1] / b[-1]
            off = len(a) - len(b)
            for j, y in enumerate(b):
                a[off + j] -= t * y
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return ZERO
    den = 1
    for c in a:
        den = den * c.denominator // _igcd(den, c.denominator)
    return primitive_part(Polynomial(int(c * den) for c in a))


# rendering -------------------------------------------------------------------


def _term(c: int, k: int, var: str, latex: bool) -> str:
    mag = abs(c)
    if k == 0:
        return str(mag)
    if k == 1:
        power = var
    elif latex and k >= 10:
        power = f"{var}^{{{k}}}"
    else:
        power = f"{var}^{k}"
    return power if mag == 1 else f"{mag}{power}"


def _render(p: Polynomial, var: str, latex: bool) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        t = _term(c, k, var, latex)
        if not out:
            out.append(("-" if c < 0 else "") + t)
        else:
            out.append(("- " if c < 0 else "+ ") + t)
    return " ".join(out)


def to_text(p: Polynomial, var: str = "q") -> str:
    return _render(p, var, latex=False)


def to_latex(p: Polynomial, var: str = "q") -> str:
    return _render(p, var, latex=True)


def to_json_obj(p: Polynomial, var: str = "q") -> dict:
    return {
        "var": var,
        "coeffs": [c if abs(c) <= _INT64_MAX else str(c) for c in p.coeffs],
    }


def to_json(p: Polynomial, var: str = "q") -> str:
    return json.dumps(to_json_obj(p, var), separators=(",", ":"))


def from_json_obj(obj: dict) -> Polynomial:
    return Polynomial(int(c) for c in obj["coeffs"])


def from_json(text: str) -> Polynomial:
    return from_json_obj(json.loads(text))


_TERM_RE = re.compile(r"([+-])(\d*)\*?(?:([a-z])(?:\^(\d+))?)?")


def parse(text: str, var: str = "q") -> Polynomial:
    """Parse text or LaTeX renderings such as ``'q^{14} - 3q^2 + 7'``."""
    s = re.sub(r"[\s{}$]", "", text)
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos + 1:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, v, exp = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r}")
        if not num and v is None:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(num) if num else 1
        k = (int(exp) if exp else 1) if v else 0
        coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
        pos = m.end()
    deg = max(coeffs, default=0)
    return Polynomial(coeffs.get(i, 0) for i in range(deg + 1))
