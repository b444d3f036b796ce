"""Exact rational scalars and dense matrix algebra.

Scalars are :class:`fractions.Fraction`, which is already kept in lowest
terms with a positive denominator. This module adds the strict text form used
by every JSON/CSV surface (``"p/q"`` or ``"p"``) and a small immutable matrix
type with fraction-free determinant and exact inversion.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class SingularMatrixError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` or ``"-p/q"`` into a canonical fraction.

    Decimal points, exponents and embedded whitespace are rejected so that
    the text form stays exact and unambiguous.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator: {text!r}")
    return Fraction(num, den)


rat_parse = parse_rational


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x) -> Fraction:
    """Coerce ints, fractions and rational strings. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Matrix:
    """Immutable dense matrix of fractions, stored row-major."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entries(self) -> list[Fraction]:
        return [x for row in self._rows for x in row]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows)) if self.nrows else Matrix([])

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows))
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
             for row in self._rows]
        )

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix([[c * x for x in row] for row in self._rows])

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in row) + "]" for row in self._rows
        )
        return f"Matrix([{body}])"


def det(m: Matrix) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Rows are first cleared of denominators so the elimination runs over
    integers, where every Bareiss division is exact.
    """
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)

    a: list[list[int]] = []
    scale = Fraction(1)
    for row in m.rows:
        lcm = math.lcm(*(x.denominator for x in row))
        a.append([int(x * lcm) for x in row])
        scale *= lcm

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1]) / scale


def invert(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination, first nonzero pivot."""
    if not m.is_square:
        raise ValueError(f"inverse of non-square {m.shape} matrix")
    n = m.nrows
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.rows)]
    for col in range(n):
        for r in range(col, n):
            if a[r][col] != 0:
                break
        else:
            raise SingularMatrixError("matrix is singular")
        if r != col:
            a[col], a[r] = a[r], a[col]
        pivot = a[col][col]
        if pivot != 1:
            a[col] = [x / pivot for x in a[col]]
        prow = a[col]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
    return Matrix(row[n:] for row in a)


def matvec(m: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    if len(v) != m.ncols:
        raise ValueError("vector length does not match matrix")
    return tuple(sum((a * as_rational(b) for a, b in zip(row, v)), Fraction(0)) for row in m.rows)
