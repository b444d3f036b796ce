"""Classification of unit-cube vertices against the facets of xi(S)*S.

A cube vertex ``v`` lies on facet ``j`` of ``xi(S)*S`` exactly when
``-lambda_j(v)`` reaches the global maximum of ``-lambda_k(x)`` over all
facets and cube vertices, i.e. ``lambda_j(v) = (1 - xi) / (n + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .simplex import (
    AxialDiameterReport,
    Simplex,
    alpha_cube,
    axial_diameters,
    centroid,
    lagrange_basis,
    neg_lambda_table,
)


class NotInCubeError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalReport:
    """Per-facet maxima of ``-lambda_j`` over the cube vertices.

    ``maxima[j-1]`` is the maximum for facet ``j``; ``attaining[j-1]`` the
    sorted cube-vertex indices reaching it.
    """

    n: int
    maxima: tuple[Fraction, ...]
    attaining: tuple[tuple[int, ...], ...]

    @property
    def global_max(self) -> Fraction:
        return max(self.maxima)

    @property
    def xi(self) -> Fraction:
        return max(Fraction(1), (self.n + 1) * self.global_max + 1)

    @property
    def circumscribed(self) -> bool:
        return len(set(self.maxima)) == 1


@dataclass(frozen=True)
class Certificate:
    n: int
    xi: Fraction
    alpha: Fraction
    diameters: AxialDiameterReport
    circumscribed: bool
    perfect: bool
    incidence: dict[int, tuple[int, ...]]
    incidence_count: int


def facet_maxima(s: Simplex) -> ExtremalReport:
    table = neg_lambda_table(lagrange_basis(s))
    maxima, attaining = [], []
    for j in range(s.n + 1):
        col = [row[j] for row in table]
        m = max(col)
        maxima.append(m)
        attaining.append(tuple(v for v, x in enumerate(col) if x == m))
    return ExtremalReport(s.n, tuple(maxima), tuple(attaining))


def _classify(s: Simplex, table: list[list[Fraction]]) -> dict[int, tuple[int, ...]]:
    top = max(max(row) for row in table)
    return {
        v: tuple(j + 1 for j, x in enumerate(row) if x == top)
        for v, row in enumerate(table)
    }


def classify_vertices(s: Simplex) -> dict[int, tuple[int, ...]]:
    """Map each cube-vertex index to the facets of xi(S)*S containing it.

    Interior vertices map to an empty tuple. A vertex on a lower-dimensional
    face is reported with every facet it touches.
    """
    return _classify(s, neg_lambda_table(lagrange_basis(s)))


def incidence_count(s: Simplex) -> int:
    return sum(len(fs) for fs in classify_vertices(s).values())


def certify(s: Simplex, xi_n: Fraction | int | None = None) -> Certificate:
    """Assemble the full certificate for a simplex inside the unit cube.

    ``xi_n`` is the known minimal value of xi in dimension ``n``. When it is
    ``None`` the simplex can still be certified perfect if ``xi(S) = n``,
    since ``n`` is a lower bound for every simplex in the cube.
    """
    if not s.inside_cube():
        raise NotInCubeError("simplex is not contained in the unit cube")
    b = lagrange_basis(s)
    table = neg_lambda_table(b)
    top = max(max(row) for row in table)
    xi = max(Fraction(1), (s.n + 1) * top + 1)
    alpha = alpha_cube(b)
    facet_max = [max(row[j] for row in table) for j in range(s.n + 1)]
    circumscribed = len(set(facet_max)) == 1
    incidence = _classify(s, table)
    target = Fraction(xi_n) if xi_n is not None else Fraction(s.n)
    perfect = circumscribed and xi == target and all(incidence.values())
    return Certificate(
        n=s.n,
        xi=xi,
        alpha=alpha,
        diameters=axial_diameters(b),
        circumscribed=circumscribed,
        perfect=perfect,
        incidence=incidence,
        incidence_count=sum(len(fs) for fs in incidence.values()),
    )


def check_centroid_theorem(s: Simplex) -> bool:
    """If S sits in the cube and the cube sits in n*S, the centroids coincide.

    Returns True vacuously when the hypothesis does not hold.
    """
    if not s.inside_cube():
        return True
    table = neg_lambda_table(lagrange_basis(s))
    xi = max(Fraction(1), (s.n + 1) * max(max(row) for row in table) + 1)
    if xi > s.n:
        return True
    half = Fraction(1, 2)
    return all(c == half for c in centroid(s))
