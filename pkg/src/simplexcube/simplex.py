"""Simplex model, basic Lagrange polynomials and the homothety functionals.

Facets are numbered ``1..n+1``: facet ``j`` is the face opposite vertex ``j``
and lies in the hyperplane ``lambda_j = 0``. Cube vertices are indexed in
binary counting order, coordinate ``i`` (0-based) of vertex ``b`` being bit
``i`` of ``b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .linalg import Matrix, SingularMatrixError, as_rational, det, invert

Point = tuple[Fraction, ...]


class DegenerateSimplexError(ValueError):
    pass


@dataclass(frozen=True, init=False)
class Simplex:
    n: int
    vertices: tuple[Point, ...]

    def __init__(self, vertices: Sequence[Sequence], n: int | None = None):
        pts = tuple(tuple(as_rational(c) for c in v) for v in vertices)
        dim = len(pts) - 1 if n is None else n
        if dim < 1 or len(pts) != dim + 1:
            raise ValueError(f"need n+1 vertices for dimension {dim}, got {len(pts)}")
        if any(len(p) != dim for p in pts):
            raise ValueError(f"every vertex must have {dim} coordinates")
        object.__setattr__(self, "n", dim)
        object.__setattr__(self, "vertices", pts)
        if det(node_matrix(self)) == 0:
            raise DegenerateSimplexError("vertices are affinely dependent")

    def inside_cube(self) -> bool:
        return all(0 <= c <= 1 for v in self.vertices for c in v)


@dataclass(frozen=True)
class LagrangeBasis:
    """Inverse node matrix; column ``j-1`` holds the coefficients of lambda_j.

    Row ``i`` (``i < n``) carries the coefficients of ``x_{i+1}``; the last
    row carries the constant terms.
    """

    n: int
    coeffs: Matrix
    vertices: tuple[Point, ...]

    def coefficients(self, j: int) -> tuple[Fraction, ...]:
        _check_facet(j, self.n)
        return self.coeffs.column(j - 1)


@dataclass(frozen=True)
class AxialDiameterReport:
    diameters: tuple[Fraction, ...]
    centers: tuple[Point, ...]
    weights: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.diameters)


def _check_facet(j: int, n: int) -> None:
    if not 1 <= j <= n + 1:
        raise IndexError(f"facet index {j} outside 1..{n + 1}")


def node_matrix(s: Simplex) -> Matrix:
    return Matrix([list(v) + [1] for v in s.vertices])


def volume(s: Simplex) -> Fraction:
    return abs(det(node_matrix(s))) / math.factorial(s.n)


def lagrange_basis(s: Simplex) -> LagrangeBasis:
    try:
        inv = invert(node_matrix(s))
    except SingularMatrixError as exc:
        raise DegenerateSimplexError(str(exc)) from exc
    return LagrangeBasis(s.n, inv, s.vertices)


def eval_lambda(b: LagrangeBasis, j: int, x: Sequence) -> Fraction:
    _check_facet(j, b.n)
    if len(x) != b.n:
        raise ValueError(f"point has {len(x)} coordinates, expected {b.n}")
    col = b.coeffs.column(j - 1)
    return sum((c * as_rational(xi) for c, xi in zip(col, x)), col[-1])


def barycentric(b: LagrangeBasis, x: Sequence) -> tuple[Fraction, ...]:
    return tuple(eval_lambda(b, j, x) for j in range(1, b.n + 2))


def axial_diameters(b: LagrangeBasis) -> AxialDiameterReport:
    n = b.n
    diameters, centers, weights = [], [], []
    for i in range(n):
        row = b.coeffs.rows[i]
        total = sum(abs(l) for l in row)
        m = tuple(abs(l) / total for l in row)
        diameters.append(2 / total)
        centers.append(
            tuple(sum((mj * v[k] for mj, v in zip(m, b.vertices)), Fraction(0)) for k in range(n))
        )
        weights.append(m)
    return AxialDiameterReport(tuple(diameters), tuple(centers), tuple(weights))


def alpha_cube(b: LagrangeBasis) -> Fraction:
    """alpha(S) for the unit cube, computed from both diameter and coefficient sums."""
    via_diameters = sum((1 / d for d in axial_diameters(b).diameters), Fraction(0))
    via_coeffs = sum((abs(l) for row in b.coeffs.rows[: b.n] for l in row), Fraction(0)) / 2
    if via_diameters != via_coeffs:
        raise ArithmeticError(f"alpha mismatch: {via_diameters} != {via_coeffs}")
    return via_coeffs


def cube_vertex(index: int, n: int) -> Point:
    return tuple(Fraction((index >> i) & 1) for i in range(n))


def cube_vertices(n: int) -> Iterator[Point]:
    for b in range(1 << n):
        yield cube_vertex(b, n)


def neg_lambda_table(b: LagrangeBasis) -> list[list[Fraction]]:
    """``table[v][j-1] = -lambda_j(v)`` for every cube vertex index ``v``.

    Uses the 0/1 structure of cube vertices: lambda_j(v) is the constant term
    plus the coefficients of the coordinates set in ``v``.
    """
    n = b.n
    rows = b.coeffs.rows
    const = rows[n]
    table: list[list[Fraction]] = [[-c for c in const]]
    for v in range(1, 1 << n):
        low = (v & -v).bit_length() - 1
        prev = table[v & (v - 1)]
        coeff = rows[low]
        table.append([p - c for p, c in zip(prev, coeff)])
    return table


def xi_polytope(s: Simplex, c_vertices: Sequence[Sequence]) -> Fraction:
    """Smallest sigma >= 1 with conv(c_vertices) inside sigma*S."""
    if not c_vertices:
        raise ValueError("polytope needs at least one vertex")
    b = lagrange_basis(s)
    best = None
    for x in c_vertices:
        if len(x) != s.n:
            raise ValueError(f"polytope vertex of dimension {len(x)}, simplex has {s.n}")
        for j in range(1, s.n + 2):
            v = -eval_lambda(b, j, x)
            if best is None or v > best:
                best = v
    return max(Fraction(1), (s.n + 1) * best + 1)


def xi_cube(s: Simplex) -> Fraction:
    table = neg_lambda_table(lagrange_basis(s))
    best = max(max(row) for row in table)
    return max(Fraction(1), (s.n + 1) * best + 1)


def centroid(s: Simplex) -> Point:
    k = s.n + 1
    return tuple(sum(col, Fraction(0)) / k for col in zip(*s.vertices))
