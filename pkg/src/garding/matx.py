"""Exact Z/M-matrix classification and multivariate characteristic polynomials."""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .polycore import Polynomial, RationalLike, to_fraction

MAX_ORDER = 12


class MatrixClass(str, Enum):
    NOT_Z = "not_Z"
    Z_ONLY = "Z_only"
    M_MATRIX = "M_matrix"
    INVERSE_M = "inverse_M"


class RationalMatrix:
    """A square matrix with Fraction entries."""

    __slots__ = ("rows", "_minors")

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = tuple(tuple(to_fraction(v) for v in r) for r in rows)
        self._minors: dict[int, Fraction] = {}

    @classmethod
    def identity(cls, n: int, scale: RationalLike = 1) -> "RationalMatrix":
        s = to_fraction(scale)
        return cls([[s if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_json(cls, data: dict) -> "RationalMatrix":
        m = cls(data["entries"])
        if "n" in data and data["n"] != m.order:
            raise ValueError("declared order does not match the entries")
        return m

    def to_json(self) -> dict:
        return {"n": self.order, "entries": [[str(v) for v in r] for r in self.rows]}

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(v) for v in r] for r in self.rows]})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def det(self) -> Fraction:
        return self.principal_minor((1 << self.order) - 1)

    def inverse(self) -> "RationalMatrix":
        return RationalMatrix(_linalg.inverse(self.rows))

    def principal_minor(self, subset: int | Iterable[int]) -> Fraction:
        """det(A_S) for S given as a 0-based bitmask or an iterable of 1-based indices."""
        if not isinstance(subset, int):
            mask = 0
            for i in subset:
                mask |= 1 << (i - 1)
            subset = mask
        cached = self._minors.get(subset)
        if cached is None:
            idx = [k for k in range(self.order) if subset >> k & 1]
            cached = _linalg.det([[self.rows[i][j] for j in idx] for i in idx])
            self._minors[subset] = cached
        return cached

    def is_z(self) -> bool:
        return all(v <= 0 for i, r in enumerate(self.rows) for j, v in enumerate(r) if i != j)


def _check_order(a: RationalMatrix) -> None:
    if a.order > MAX_ORDER:
        raise ValueError(f"matrix order {a.order} exceeds the limit {MAX_ORDER}")


def _as_matrix(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> RationalMatrix:
    return a if isinstance(a, RationalMatrix) else RationalMatrix(a)


def is_m_matrix(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> bool:
    a = _as_matrix(a)
    _check_order(a)
    return a.is_z() and all(a.principal_minor(s) >= 0 for s in range(1, 1 << a.order))


def classify(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> MatrixClass:
    a = _as_matrix(a)
    _check_order(a)
    if a.is_z():
        return MatrixClass.M_MATRIX if is_m_matrix(a) else MatrixClass.Z_ONLY
    if a.det() != 0 and is_m_matrix(a.inverse()):
        return MatrixClass.INVERSE_M
    return MatrixClass.NOT_Z


def charpoly_q(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> Polynomial:
    """det(X + A) with X = diag(x_1..x_n): x^S has coefficient det(A_{[n] minus S})."""
    a = _as_matrix(a)
    _check_order(a)
    n = a.order
    full = (1 << n) - 1
    terms = {}
    for s in range(1 << n):
        c = a.principal_minor(full & ~s)
        if c:
            terms[tuple(s >> k & 1 for k in range(n))] = c
    return Polynomial(n, terms)


def charpoly_p(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> Polynomial:
    """det(x0 I + X A) in variables (x0, x_1..x_n); x0 is variable 1."""
    a = _as_matrix(a)
    _check_order(a)
    n = a.order
    terms = {}
    for s in range(1 << n):
        c = a.principal_minor(s)
        if c:
            k = bin(s).count("1")
            terms[(n - k,) + tuple(s >> j & 1 for j in range(n))] = c
    return Polynomial(n + 1, terms)


def determinantal_genpoly(a: RationalMatrix | Sequence[Sequence[RationalLike]]) -> Polynomial:
    """det(A) det(A^{-1} - I + X), the generating polynomial of the determinantal measure."""
    a = _as_matrix(a)
    _check_order(a)
    d = a.det()
    if d == 0:
        raise ZeroDivisionError("matrix is singular")
    shifted = a.inverse() - RationalMatrix.identity(a.order)
    return charpoly_q(shifted).scale(d)


def cofactor_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Laplace expansion along the first row; slow, kept as an independent oracle."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(sub)
    return total


def random_m_matrix(n: int, rng, max_entry: int = 3) -> RationalMatrix:
    """s I - B with B >= 0 and s the largest row sum of B, so all principal minors are >= 0."""
    b = [[Fraction(rng.randint(0, max_entry), rng.randint(1, 2)) for _ in range(n)] for _ in range(n)]
    s = max(sum(r) for r in b)
    return RationalMatrix([[(s if i == j else 0) - b[i][j] for j in range(n)] for i in range(n)])


def random_inverse_m_matrix(n: int, rng, max_entry: int = 3) -> RationalMatrix:
    """Inverse of a nonsingular random M-matrix (diagonal shifted up by one)."""
    m = random_m_matrix(n, rng, max_entry)
    shifted = m + RationalMatrix.identity(n)
    return shifted.inverse()


def principal_subsets(n: int) -> Iterable[tuple[int, ...]]:
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)
