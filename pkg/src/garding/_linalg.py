"""Small exact linear-algebra kernels shared by the checkers and matrix modules."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def _integer_scaled(rows: Matrix) -> tuple[list[list[int]], int]:
    """Integer matrix D*A together with the common denominator D."""
    den = 1
    for row in rows:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    return [[int(v * den) for v in row] for row in rows], den


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(rows: Matrix) -> Fraction:
    if not rows:
        return Fraction(1)
    ints, den = _integer_scaled(rows)
    return Fraction(bareiss_det(ints), den ** len(rows))


def inverse(rows: Matrix) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def charpoly(rows: Matrix) -> list[Fraction]:
    """Coefficients of det(tI - A), constant term first (Faddeev-LeVerrier)."""
    n = len(rows)
    a = [[Fraction(v) for v in row] for row in rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum((a[i][l] * m[l][j] for l in range(n)), Fraction(0)) for j in range(n)]
              for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        prod_trace = sum((sum((a[i][l] * m[l][i] for l in range(n)), Fraction(0)) for i in range(n)),
                         Fraction(0))
        coeffs[n - k] = -prod_trace / k
    return coeffs


def sign_changes(seq: Sequence[Fraction]) -> int:
    last = 0
    count = 0
    for v in seq:
        s = (v > 0) - (v < 0)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def positive_eigenvalue_count(symmetric: Matrix) -> int:
    """Exact count of positive eigenvalues of a symmetric rational matrix.

    The characteristic polynomial of a symmetric matrix is real-rooted, so
    Descartes' rule of signs is exact on it.
    """
    return sign_changes(charpoly(symmetric))
