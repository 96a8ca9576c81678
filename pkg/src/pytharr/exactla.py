"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are tuples of such tuples.  Nothing here ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonSquare, ParseError

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Read ``"p/q"`` or ``"n"``.  Integers are accepted, floats never are."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    match = _RATIONAL.match(text)
    if match is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def mat(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vec(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise DimensionMismatch("ragged matrix")
    return out


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def det(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"{n} rows but row lengths {[len(r) for r in m]}")
    a = [list(map(Fraction, r)) for r in m]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        result *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def kernel(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """A basis of the right null space of ``m``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def independent_subset(vectors: Sequence[Sequence]) -> list[Vector]:
    """Greedy maximal independent subfamily, keeping the given order."""
    chosen: list[Vector] = []
    for v in vectors:
        if rank(chosen + [tuple(v)]) > len(chosen):
            chosen.append(tuple(v))
    return chosen


def primitive_integer(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale to coprime integers, keeping the sign of every entry."""
    den = 1
    for v in values:
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    g = 0
    for i in ints:
        g = gcd(g, i)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class AffineSubspace:
    """Either the empty set (``base is None``) or ``base + span(directions)``."""

    ambient: int
    base: Vector | None
    directions: tuple[Vector, ...] = ()

    def __post_init__(self):
        if self.base is None:
            if self.directions:
                raise ValueError("empty subspace with directions")
            return
        if len(self.base) != self.ambient or any(len(d) != self.ambient for d in self.directions):
            raise DimensionMismatch("vector length differs from ambient dimension")
        if rank(self.directions) != len(self.directions):
            raise ValueError("directions are not independent")

    @classmethod
    def empty(cls, ambient: int) -> "AffineSubspace":
        return cls(ambient, None)

    @classmethod
    def whole(cls, ambient: int) -> "AffineSubspace":
        zero = tuple(Fraction(0) for _ in range(ambient))
        units = tuple(tuple(Fraction(int(i == j)) for i in range(ambient)) for j in range(ambient))
        return cls(ambient, zero, units)

    @classmethod
    def point(cls, p: Sequence) -> "AffineSubspace":
        return cls(len(p), vec(p))

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def dim(self) -> int:
        return -1 if self.base is None else len(self.directions)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def contains_point(self, p: Sequence) -> bool:
        if self.base is None:
            return False
        diff = sub(vec(p), self.base)
        return self.in_direction_span(diff)

    def in_direction_span(self, v: Sequence) -> bool:
        if is_zero(v):
            return True
        return rank(list(self.directions) + [tuple(v)]) == len(self.directions)

    def contains(self, other: "AffineSubspace") -> bool:
        if other.ambient != self.ambient:
            raise DimensionMismatch("different ambient dimensions")
        if other.base is None:
            return True
        if self.base is None:
            return False
        return self.contains_point(other.base) and all(self.in_direction_span(d) for d in other.directions)

    def same_set(self, other: "AffineSubspace") -> bool:
        return self.contains(other) and other.contains(self)

    def within_hyperplane(self, normal: Sequence, offset) -> bool:
        """True when every point x of the subspace satisfies ``normal . x = offset``."""
        if self.base is None:
            return True
        return dot(normal, self.base) == offset and all(dot(normal, d) == 0 for d in self.directions)

    def cut(self, normal: Sequence, offset) -> "AffineSubspace":
        """Intersection with the hyperplane ``normal . x = offset``."""
        if self.base is None:
            return self
        alpha = [dot(normal, d) for d in self.directions]
        beta = Fraction(offset) - dot(normal, self.base)
        j = next((i for i, a in enumerate(alpha) if a != 0), None)
        if j is None:
            return self if beta == 0 else AffineSubspace.empty(self.ambient)
        dj = self.directions[j]
        base = add(self.base, scale(beta / alpha[j], dj))
        dirs = tuple(
            sub(d, scale(alpha[i] / alpha[j], dj)) for i, d in enumerate(self.directions) if i != j
        )
        return AffineSubspace(self.ambient, base, dirs)

    def equations(self) -> tuple[Matrix, Vector]:
        """A system ``A x = b`` whose solution set is this subspace."""
        if self.base is None:
            row = tuple(Fraction(0) for _ in range(self.ambient))
            return (row,), (Fraction(1),)
        normals = kernel(self.directions, self.ambient) if self.directions else [
            tuple(Fraction(int(i == j)) for i in range(self.ambient)) for j in range(self.ambient)
        ]
        return tuple(normals), tuple(dot(n, self.base) for n in normals)

    def sample(self, coefficients: Sequence) -> Vector:
        """The point ``base + sum(c_i * d_i)``."""
        if self.base is None:
            raise ValueError("empty subspace has no points")
        p = self.base
        for c, d in zip(coefficients, self.directions):
            p = add(p, scale(Fraction(c), d))
        return p


def solve(a: Sequence[Sequence], b: Sequence) -> AffineSubspace:
    """Full solution set of ``a x = b``."""
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} rows but right-hand side of length {len(b)}")
    if not a:
        raise DimensionMismatch("cannot infer the number of unknowns of an empty system")
    ncols = len(a[0])
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return AffineSubspace.empty(ncols)
    base = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        base[pc] = row[ncols]
    return AffineSubspace(ncols, tuple(base), tuple(kernel(a, ncols)))


def intersect(s1: AffineSubspace, s2: AffineSubspace) -> AffineSubspace:
    if s1.ambient != s2.ambient:
        raise DimensionMismatch(f"ambient dimensions {s1.ambient} and {s2.ambient}")
    out = s1
    rows, rhs = s2.equations()
    for row, value in zip(rows, rhs):
        out = out.cut(row, value)
        if out.is_empty:
            break
    return out
